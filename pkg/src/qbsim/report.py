"""Machine-readable deviation report: closed-form vs numeric disagreements."""

import csv
from dataclasses import dataclass
from typing import List

FIELDS = ("param_set_id", "element", "closed_re", "closed_im", "numeric_re", "numeric_im", "abs_diff")


@dataclass
class DeviationRow:
    param_set_id: str
    element: str  # matrix index like "(2,2)" or a scalar tag like "xi"
    closed: complex
    numeric: complex

    @property
    def abs_diff(self) -> float:
        return abs(self.closed - self.numeric)


class DeviationReport:
    """Collects closed-vs-numeric rows above tolerance and writes them as CSV."""

    def __init__(self):
        self.rows: List[DeviationRow] = []

    def compare(self, param_set_id, element, closed, numeric, tol) -> bool:
        """Record a row if |closed - numeric| > tol; returns True when it matched."""
        row = DeviationRow(param_set_id, element, complex(closed), complex(numeric))
        if row.abs_diff > tol:
            self.rows.append(row)
            return False
        return True

    def compare_matrices(self, param_set_id, closed, numeric, tol) -> int:
        """Elementwise comparison; returns the number of deviating elements."""
        n_bad = 0
        for i in range(closed.shape[0]):
            for j in range(closed.shape[1]):
                if not self.compare(param_set_id, f"({i + 1},{j + 1})", closed[i, j], numeric[i, j], tol):
                    n_bad += 1
        return n_bad

    def write(self, path):
        with open(path, "w", newline="\n") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(FIELDS)
            for r in self.rows:
                w.writerow([
                    r.param_set_id, r.element,
                    f"{r.closed.real:.16e}", f"{r.closed.imag:.16e}",
                    f"{r.numeric.real:.16e}", f"{r.numeric.imag:.16e}",
                    f"{r.abs_diff:.16e}",
                ])
        return path
