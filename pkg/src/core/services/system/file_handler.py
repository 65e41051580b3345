"""
File handler that consolidates all report file operations.
"""

import json
from pathlib import Path
from typing import Any, Iterable, List, Mapping, Sequence

import pandas as pd
from loguru import logger

from core.exceptions.system_exceptions import OutputNotWritableError
from core.utils.serialization import to_builtin


class FileHandler:
    """Writes report files under one output directory and remembers them, so a
    failed run can remove what it produced."""

    def __init__(self, output_dir: Path):
        self.output_dir = Path(output_dir)
        self.created: List[Path] = []

    def ensure_directory(self, directory: Path = None) -> Path:
        """
        Ensure directory exists.

        Raises:
            OutputNotWritableError: the directory cannot be created
        """
        directory = Path(directory or self.output_dir)
        try:
            directory.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            logger.error(f"Error creating directory {directory}: {e}")
            raise OutputNotWritableError(str(directory), e)
        return directory

    def path_for(self, name: str) -> Path:
        return self.output_dir / name

    def _track(self, path: Path):
        if path not in self.created:
            self.created.append(path)

    def save_json(self, payload: Mapping[str, Any], name: str) -> Path:
        """Write JSON with sorted keys and a trailing newline (byte-stable)."""
        path = self.path_for(name)
        text = json.dumps(to_builtin(payload), indent=2, sort_keys=True) + "\n"
        return self.save_text_file(text, path)

    def save_csv(
        self, rows: Iterable[Mapping[str, Any]], columns: Sequence[str], name: str
    ) -> Path:
        path = self.path_for(name)
        df = pd.DataFrame(list(rows), columns=list(columns))
        try:
            self.ensure_directory(path.parent)
            self._track(path)
            df.to_csv(path, index=False, lineterminator="\n")
        except OSError as e:
            logger.error(f"Error saving CSV file {path}: {e}")
            raise OutputNotWritableError(str(path), e)
        logger.debug(f"CSV file saved: {path} ({len(df)} rows)")
        return path

    def save_text_file(self, content: str, filepath: Path) -> Path:
        filepath = Path(filepath)
        try:
            self.ensure_directory(filepath.parent)
            self._track(filepath)
            filepath.write_text(content, encoding="utf-8")
        except OSError as e:
            logger.error(f"Error saving text file {filepath}: {e}")
            raise OutputNotWritableError(str(filepath), e)
        logger.debug(f"Text file saved: {filepath}")
        return filepath

    def track(self, path: Path) -> Path:
        """Register a file written by someone else for cleanup."""
        self._track(Path(path))
        return Path(path)

    def remove_created(self) -> int:
        """Delete every file this handler wrote. Returns how many were removed."""
        removed = 0
        for path in reversed(self.created):
            try:
                path.unlink()
                removed += 1
            except FileNotFoundError:
                continue
            except OSError as e:
                logger.error(f"Error removing partial output {path}: {e}")
        if removed:
            logger.info(f"Removed {removed} partial output files")
        self.created.clear()
        return removed
