"""
Report writer: CSV tables and JSON summaries under one output directory.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Union

import pandas as pd

logger = logging.getLogger(__name__)

CSV_FLOAT_FORMAT = "%.17g"


class ReportWriter:
    """Single writer for one experiment run; remembers every path it wrote."""

    def __init__(self, output_dir: Union[str, Path]):
        self.output_dir = Path(output_dir)
        self.written: List[str] = []

    def _path(self, filename: str) -> Path:
        self.output_dir.mkdir(parents=True, exist_ok=True)
        return self.output_dir / filename

    def write_frame(self, name: str, frame: pd.DataFrame) -> Path:
        path = self._path(f"{name}.csv")
        frame.to_csv(path, index=False, float_format=CSV_FLOAT_FORMAT)
        self.written.append(str(path))
        logger.debug(f"Wrote {len(frame)} rows to {path}")
        return path

    def write_json(self, name: str, payload: Dict[str, Any]) -> Path:
        path = self._path(f"{name}.json")
        with open(path, "w", encoding="utf-8") as f:
            json.dump(payload, f, indent=2, sort_keys=True)
            f.write("\n")
        self.written.append(str(path))
        logger.debug(f"Wrote {path}")
        return path
