import json
import math
from typing import Iterable, List, Optional

import pandas as pd

from umbralab.components.identities import IdentityReport, ReportStatus

RESULT_COLUMNS = ['closed_value', 'oracle_value', 'abs_err', 'rel_err', 'status', 'evaluations']
FLOAT_FORMAT = '%.17g'
SKIPPED = 'skipped'


class TableBuilder:
    """Builds the sweep table: one row per parameter point, parameters first."""
    def __init__(self, reports: Iterable[IdentityReport]):
        self.reports = list(reports)

    def param_columns(self) -> List[str]:
        columns: List[str] = []
        for report in self.reports:
            for name in report.params:
                if name not in columns:
                    columns.append(name)
        return columns

    def create_frame(self) -> pd.DataFrame:
        rows = []
        for report in self.reports:
            record = report.to_record()
            if report.status is ReportStatus.CONSTRAINT_VIOLATION:
                record['status'] = SKIPPED
            rows.append(record)
        columns = self.param_columns() + RESULT_COLUMNS
        return pd.DataFrame(rows, columns=columns)

    def to_csv(self, path: Optional[str] = None) -> Optional[str]:
        return self.create_frame().to_csv(path, index=False, float_format=FLOAT_FORMAT)

    def to_json(self, path: Optional[str] = None) -> Optional[str]:
        """Records as a JSON array; floats keep their shortest round-trip repr."""
        rows = [{k: nan_to_none(v) for k, v in row.items()}
                for row in self.create_frame().to_dict(orient='records')]
        text = json.dumps(rows, default=_to_native)
        if path is None:
            return text
        with open(path, 'w') as fh:
            fh.write(text)
        return None

    def render(self, output_format: str, path: Optional[str] = None) -> Optional[str]:
        if output_format == 'json':
            return self.to_json(path)
        return self.to_csv(path)

    def exit_code(self) -> int:
        """1 if any row failed its check, otherwise 0."""
        return 1 if any(r.status is ReportStatus.FAILED for r in self.reports) else 0


def nan_to_none(value):
    if isinstance(value, float) and math.isnan(value):
        return None
    return value


def _to_native(value):
    # numpy scalars that pandas leaves in object columns
    if hasattr(value, 'item'):
        return nan_to_none(value.item())
    raise TypeError(f"cannot serialise {type(value).__name__}")
