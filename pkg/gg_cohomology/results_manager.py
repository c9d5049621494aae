import csv
import json
from pathlib import Path
from typing import Dict, List, Optional


class Result:
    """A report of one command: run config, region layout and findings."""

    def __init__(self, payload: Optional[dict] = None, rows: Optional[List[Dict]] = None):
        self.payload = payload or {}
        self.rows = rows or []

    def __str__(self):
        return json.dumps(self.payload, sort_keys=True, indent=2, default=str)

    def save_to_file(self, file_path):
        """Write the JSON report and, when rows exist, a CSV next to it."""
        file_path = Path(file_path)
        file_path.parent.mkdir(parents=True, exist_ok=True)
        with open(file_path, 'w', encoding='utf-8') as file:
            json.dump(self.payload, file, sort_keys=True, indent=2, default=str)
            file.write("\n")
        if self.rows:
            self.save_rows(file_path.with_suffix(".csv"))
        return file_path

    def save_rows(self, file_path):
        columns = sorted({key for row in self.rows for key in row})
        with open(file_path, 'w', newline='', encoding='utf-8') as file:
            writer = csv.DictWriter(file, fieldnames=columns)
            writer.writeheader()
            writer.writerows(self.rows)

    def load_from_file(self, file_path):
        with open(file_path, 'r', encoding='utf-8') as file:
            self.payload = json.load(file)
        return self
