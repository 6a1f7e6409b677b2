"""
Coefficient families g_k(x, xi) = alpha_k * c_k(theta) * s_k(xi), theta = sum_i x_i.
"""

import math
from abc import ABC, abstractmethod

import numpy as np


class CoefficientFamily(ABC):
    """Abstract base class for the per-mode shapes c_k and s_k."""

    name: str = ""

    @abstractmethod
    def spatial(self, k: int, theta: np.ndarray, dim: int) -> np.ndarray:
        """c_k evaluated at theta = x_1 + ... + x_N (k starts at 1)."""
        pass

    @abstractmethod
    def profile(self, k: int, xi: np.ndarray) -> np.ndarray:
        """s_k evaluated at xi."""
        pass


class AdditiveFamily(CoefficientFamily):
    """
    A weighted real Fourier basis independent of xi: e_1 = 1, then
    cos(j theta) and sin(j theta) for j = 1, 2, ... scaled by 1/(1 + sqrt(N) j)
    so that |c_k| + |grad c_k| <= 1.
    """

    name = "additive"

    def spatial(self, k: int, theta: np.ndarray, dim: int) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        if k == 1:
            return np.ones_like(theta)
        j = k // 2
        weight = 1.0 / (1.0 + math.sqrt(dim) * j)
        wave = np.cos(j * theta) if k % 2 == 0 else np.sin(j * theta)
        return weight * wave

    def profile(self, k: int, xi: np.ndarray) -> np.ndarray:
        return np.ones_like(np.asarray(xi, dtype=float))


class MultiplicativeDefaultFamily(CoefficientFamily):
    """cos(k theta)/(2k) * tanh(xi): vanishes at xi = 0, slope at most one in xi."""

    name = "multiplicative-default"

    def spatial(self, k: int, theta: np.ndarray, dim: int) -> np.ndarray:
        return np.cos(k * np.asarray(theta, dtype=float)) / (2.0 * k)

    def profile(self, k: int, xi: np.ndarray) -> np.ndarray:
        return np.tanh(np.asarray(xi, dtype=float))


class SineLinearFamily(CoefficientFamily):
    """sin(k theta) * xi. Its x-derivative grows like k |xi|, so it breaks the alpha_k bound."""

    name = "sine-linear"

    def spatial(self, k: int, theta: np.ndarray, dim: int) -> np.ndarray:
        return np.sin(k * np.asarray(theta, dtype=float))

    def profile(self, k: int, xi: np.ndarray) -> np.ndarray:
        return np.asarray(xi, dtype=float).copy()
