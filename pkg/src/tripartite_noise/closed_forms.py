"""Published closed-form output states, transcribed verbatim, and an audit harness.

Each form is a weighted sum of ket-bra terms ``|ket><bra|``.  Suspected
typos are kept; the only edits are the minimal syntactic repairs listed in
``closed_forms_annotations.txt``.  :func:`compare_analytic_numeric` measures
how far each transcription sits from the Kraus-sum output.
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Callable

import numpy as np

from .channels import apply_channel, assemble_scenario, scenario_for_kind
from .states import density_from_pure, initial_state
from .tensor_core import hermiticity_defect

MATCH_TOL = 1e-10
ENTRY_TOL = 1e-12
DEFAULT_SAMPLES = tuple(round(0.1 * i, 1) for i in range(11))

Coefficient = Callable[[float], float]

# --- coefficient tables -------------------------------------------------------

A: dict[str, Coefficient] = {
    "A1": lambda p: (1 - p) ** 2 / 2 + p / 3 * (1 - p) + p**2 / 18,
    "A2": lambda p: (1 - p) ** 2 / 2 - p / 3 * (1 - p) + p**2 / 18,
    "A3": lambda p: p / 3 * (1 - p) + p**2 / 9,
    "A4": lambda p: p**2 / 9 - p / 3 * (1 - p),
    "A5": lambda p: p**2 / 18,
    "A6": lambda p: p**2 / 9 + p / 6 * (1 - p),
    "A7": lambda p: p**2 / 9 - p / 6 * (1 - p),
    "A8": lambda p: p / 6 * (1 - p),
    "A9": lambda p: p**2 / 18,
}

B: dict[str, Coefficient] = {
    "B1": lambda p: 0.5 * ((1 - p) ** 3 + p * (1 - p) + 5 / 9 * p**2 * (1 - p) + p**3 / 3),
    # printed under the name B1 a second time
    "B2": lambda p: 0.5 * ((1 - p) ** 3 - p * (1 - p) + 5 / 9 * p**2 * (1 - p) - p**3 / 27),
    "B3": lambda p: (p * (1 - p) ** 2 + 7 * p**2 / 3 * (1 - p) + p**3 / 3) / 3,
    "B4": lambda p: p**2 / 9 * (1 - p),
    "B5": lambda p: p / 2 * (1 - p) ** 2 + p**2 / 9 * (1 - p),
    "B6": lambda p: (p * (1 - p) ** 2 + 5 * p**2 / 3 * (1 - p) + p**3 / 3) / 3,
}

A_TILDE: dict[str, Coefficient] = {
    "A~1": lambda p: (1 - p) ** 2 / 3 + p**2 / 9,
    "A~2": lambda p: (1 - p) ** 2 / 3 - p**2 / 27,
    "A~3": lambda p: (1 - p) ** 2 / 3 + p**2 / 27,
    "A~4": lambda p: p**2 / 27,
    "A~5": lambda p: 2 * p**2 / 27,
}

B_TILDE: dict[str, Coefficient] = {
    "B~1": lambda p: (1 - p) ** 2 / 3 + 2 * p**2 / 27,
    "B~2": lambda p: (1 - p) ** 2 / 3 - p**2 / 27,
    "B~3": lambda p: (1 - p) ** 2 / 3 + p**2 / 27,
    "B~4": lambda p: (1 - p) ** 2 / 3 + 2 * p**2 / 9,
    "B~5": lambda p: p**2 / 27,
}

A_TILDE_NC: dict[str, Coefficient] = {
    "A~nc1": lambda p: 2 * p / 27,
    "A~nc2": lambda p: 2 / 27 * p * (1 - p) + p**2 / 27 + 1 / 3,
    "A~nc3": lambda p: -2 / 27 * p * (1 - p) - 5 * p**2 / 27 + 1 / 3,
    "A~nc4": lambda p: 4 * p / 27,
    "A~nc5": lambda p: p**2 / 27 + 1 / 3,
    # defined but never used by the printed state
    "A~nc6": lambda p: 2 / 27 * (3 * p**2 - p) + 1 / 3,
}

B_TILDE_NC: dict[str, Coefficient] = {
    "B~nc1": lambda p: 4 / 9 * p * (1 - p) ** 2 + 1 / 9 * p**2 * (1 - p) - 4 / 81 * p**3,
    "B~nc2": lambda p: 4 / 9 * p * (1 - p) ** 2 - 4 / 81 * p**3,
    "B~nc3": lambda p: 1 / 9 * p**2 * (1 - p) + 1 / 81 * p**3,
    "B~nc4": lambda p: 2 / 81 * p**3,
    "B~nc5": lambda p: -1 / 27 * p**2 * (1 - p) - 2 / 81 * p**3,
    "B~nc6": lambda p: 4 / 9 * p * (1 - p) ** 2 - 2 / 81 * p**3,
    "B~nc7": lambda p: (1 - p) ** 3 + 4 / 9 * p * (1 - p) ** 2 + 1 / 9 * p**2 * (1 - p) + 1 / 81 * p**3,
    "B~nc8": lambda p: 1 / 27 * p**2 * (1 - p),
    "B~nc9": lambda p: (1 - p) ** 3 / 3 - 2 / 9 * p * (1 - p) ** 2 + 1 / 9 * p**2 * (1 - p) + 5 / 81 * p**3,
    "B~nc10": lambda p: (1 - p) ** 3 / 3 + p**2 / 9 * (1 - p) + 5 * p**3 / 81,
    "B~nc11": lambda p: (1 - p) ** 3 / 3 + 2 * p / 9 * (1 - p) ** 2 + p**2 / 9 * (1 - p) + p**3 / 81,
    "B~nc12": lambda p: -(p**2) / 27 * (1 - p),
}

COEFFICIENT_TABLES: dict[str, dict[str, Coefficient]] = {
    "A": A,
    "B": B,
    "A~": A_TILDE,
    "B~": B_TILDE,
    "A~nc": A_TILDE_NC,
    "B~nc": B_TILDE_NC,
}

# --- ket-bra expansions ---------------------------------------------------------
# Each entry: (weight(p), "ket,bra ket,bra ...").  A leading '-' negates a term.

RHO_GHZ = "000,000 000,111 111,000 111,111"

Form = list[tuple[Coefficient, str]]

GHZ_FORMS: dict[str, Form] = {
    "single": [
        (lambda p: (1 - p) / 2, RHO_GHZ),
        (lambda p: p / 3, "111,100 -111,011"),
        (lambda p: p / 6, "011,100 100,011 100,100 011,011"),
    ],
    "corr2": [
        # rho_g here is the bare ket-bra sum; the explicit 1/2 already normalizes it
        (lambda p: (1 - p) ** 2 / 2 + p**2 / 18, RHO_GHZ),
        (lambda p: p**2 / 9, "001,110 110,001 001,001 110,110"),
    ],
    "corr3": [
        (lambda p: (1 - p) ** 3 / 2 + p**2 / 18, "000,000"),
        (lambda p: (1 - p) ** 3 / 2 - p**3 / 54, "000,111"),
        (lambda p: (1 - p) ** 3 / 2, "111,000"),
        (lambda p: (1 - p) ** 3 / 2 + p**2 / 27, "111,111"),
    ],
    "nc2": [
        (A["A1"], "000,000 111,111"),
        (A["A2"], "000,111 111,000"),
        (A["A3"], "010,010 101,101 011,011 100,100"),
        (A["A4"], "001,110"),
        (A["A5"], "001,001"),
        (A["A6"], "110,110"),
        (A["A7"], "110,001"),
        (A["A8"], "001,111"),
        (A["A9"], "001,011 110,100 -110,011"),
    ],
    "nc3": [
        (B["B1"], "000,000 111,111"),
        (B["B2"], "000,111 111,000"),
        (B["B3"], "110,110 001,001 100,100 011,011"),
        (B["B4"], "110,001 010,101 101,010 100,011 011,100"),
        (B["B5"], "001,110"),
        (B["B6"], "010,010 101,101"),
    ],
}

W_FORMS: dict[str, Form] = {
    "single": [
        (lambda p: (3 - 2 * p) / 9, "100,100 010,010 001,010 001,001 010,001"),
        (lambda p: (3 - 4 * p) / 9, "100,010 100,001 010,100 001,100"),
    ],
    "corr2": [
        (A_TILDE["A~1"], "010,010 010,100 100,010 100,100"),
        (A_TILDE["A~2"], "010,001 001,100 001,010"),
        (A_TILDE["A~3"], "100,011 001,001"),
        (A_TILDE["A~4"], "010,101"),
        (A_TILDE["A~5"], "111,111"),
    ],
    "corr3": [
        (B_TILDE["B~1"], "001,001 001,010 001,100"),
        (B_TILDE["B~2"], "010,001"),
        (B_TILDE["B~3"], "100,011"),
        (B_TILDE["B~4"], "100,100 100,010 010,010 010,100"),
        (B_TILDE["B~5"], "010,101 010,111 010,011 -100,111 -111,010 -111,100 -111,111"),
    ],
    "nc2": [
        (A_TILDE_NC["A~nc1"], "000,011 000,101 011,000 101,000"),
        (A_TILDE_NC["A~nc2"], "010,010 100,100 001,001"),
        (A_TILDE_NC["A~nc3"], "010,100"),
        (A_TILDE_NC["A~nc3"], "001,010 001,100 100,001 010,001"),
        (A_TILDE_NC["A~nc4"], "110,000 000,110"),
        (A_TILDE_NC["A~nc5"], "100,010"),
    ],
    "nc3": [
        (B_TILDE_NC["B~nc1"], "110,000 000,110 101,000"),
        (B_TILDE_NC["B~nc2"], "011,000 000,101"),
        (B_TILDE_NC["B~nc3"], "111,100"),
        (B_TILDE_NC["B~nc4"], "011,011"),
        (B_TILDE_NC["B~nc5"], "101,011"),
        (B_TILDE_NC["B~nc6"], "000,011"),
        (B_TILDE_NC["B~nc7"], "010,010"),
        (B_TILDE_NC["B~nc8"], "111,111 110,011 011,100 011,111 101,101"),
        (B_TILDE_NC["B~nc9"], "001,010 100,010 010,001 010,100"),
        (B_TILDE_NC["B~nc10"], "100,001 001,100"),
        (B_TILDE_NC["B~nc11"], "001,001 100,100"),
        (B_TILDE_NC["B~nc12"], "011,010 111,010 110,101"),
    ],
}

FORMS = {"GHZ": GHZ_FORMS, "W": W_FORMS}


def _build(form: Form, p: float) -> np.ndarray:
    m = np.zeros((8, 8), dtype=complex)
    for weight, terms in form:
        w = weight(p)
        for term in terms.split():
            sign = -1.0 if term.startswith("-") else 1.0
            ket, bra = term.lstrip("-").split(",")
            m[int(ket, 2), int(bra, 2)] += sign * w
    return m


def literal_state(state_label: str, kind: str, p: float) -> np.ndarray:
    """The printed output state for ``state_label`` under ``kind`` noise at ``p``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p!r}")
    try:
        form = FORMS[state_label.upper()][kind]
    except KeyError:
        raise ValueError(f"no printed form for {state_label!r}/{kind!r}") from None
    return _build(form, p)


def ghz_literal_state(kind: str, p: float) -> np.ndarray:
    return literal_state("GHZ", kind, p)


def w_literal_state(kind: str, p: float) -> np.ndarray:
    return literal_state("W", kind, p)


def annotations_text() -> str:
    return resources.files(__package__).joinpath("closed_forms_annotations.txt").read_text(encoding="utf-8")


def annotations() -> list[tuple[str, str, str, str]]:
    rows = []
    for line in annotations_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        # kets contain '|', so fields are separated by ' | ' only
        label, printed, adopted, why = (f.strip() for f in line.split(" | ", 3))
        rows.append((label, printed, adopted, why))
    return rows


# --- audit ----------------------------------------------------------------------


def _ketbra(row: int, col: int) -> str:
    return f"|{row:03b}><{col:03b}|"


@dataclass(frozen=True)
class DiscrepancyReport:
    equation_label: str
    numeric_kind: str
    p_samples: tuple[float, ...]
    deviations: tuple[float, ...]
    max_abs_deviation: float
    worst_entry: tuple[int, int]
    worst_p: float
    traces_analytic: tuple[float, ...]
    traces_numeric: tuple[float, ...]
    hermiticity_defect: float
    hermitian_part_deviation: float
    spurious_entries: tuple[tuple[int, int], ...]
    missing_entries: tuple[tuple[int, int], ...]

    @property
    def verdict(self) -> str:
        return "match" if self.max_abs_deviation <= MATCH_TOL else "mismatch"

    def format(self) -> str:
        def entries(es):
            return ", ".join(_ketbra(*e) for e in es) if es else "none"

        r, c = self.worst_entry
        lines = [
            f"[{self.equation_label}] numeric={self.numeric_kind}",
            f"verdict: {self.verdict}",
            f"max_abs_deviation: {self.max_abs_deviation:.12g}",
            f"worst_entry: {_ketbra(r, c)} (row {r}, col {c}) at p={self.worst_p:.12g}",
            f"hermiticity_defect: {self.hermiticity_defect:.12g}",
            f"hermitian_part_deviation: {self.hermitian_part_deviation:.12g}",
            f"spurious_entries: {entries(self.spurious_entries)}",
            f"missing_entries: {entries(self.missing_entries)}",
            "p,deviation,trace_analytic,trace_numeric,sample_verdict",
        ]
        for p, d, ta, tn in zip(self.p_samples, self.deviations, self.traces_analytic, self.traces_numeric):
            verdict = "match" if d <= MATCH_TOL else "mismatch"
            lines.append(f"{p:.12g},{d:.12g},{ta:.12g},{tn:.12g},{verdict}")
        return "\n".join(lines) + "\n"


def compare_analytic_numeric(
    kind: str, state_label: str, p_samples=DEFAULT_SAMPLES, numeric_kind: str | None = None
) -> DiscrepancyReport:
    """Entrywise comparison of a printed form with the literal Kraus-sum output."""
    numeric_kind = numeric_kind or kind
    label = f"{state_label.lower()}/{kind}"
    rho0 = density_from_pure(initial_state(state_label))
    samples = tuple(float(p) for p in p_samples)
    devs, ta, tn = [], [], []
    worst = (-1.0, (0, 0), samples[0])
    herm_defect = herm_dev = 0.0
    printed_support = np.zeros((8, 8), dtype=bool)
    numeric_support = np.zeros((8, 8), dtype=bool)
    for p in samples:
        printed = literal_state(state_label, kind, p)
        numeric = apply_channel(rho0, assemble_scenario(scenario_for_kind(numeric_kind, p)), "literal").matrix
        diff = np.abs(printed - numeric)
        idx = np.unravel_index(np.argmax(diff), diff.shape)
        devs.append(float(diff[idx]))
        if diff[idx] > worst[0]:
            worst = (float(diff[idx]), (int(idx[0]), int(idx[1])), p)
        ta.append(float(np.trace(printed).real))
        tn.append(float(np.trace(numeric).real))
        herm_defect = max(herm_defect, hermiticity_defect(printed))
        herm_dev = max(herm_dev, float(np.max(np.abs(0.5 * (printed + printed.conj().T) - numeric))))
        printed_support |= np.abs(printed) > ENTRY_TOL
        numeric_support |= np.abs(numeric) > ENTRY_TOL
    spurious = tuple((int(i), int(j)) for i, j in zip(*np.nonzero(printed_support & ~numeric_support)))
    missing = tuple((int(i), int(j)) for i, j in zip(*np.nonzero(numeric_support & ~printed_support)))
    return DiscrepancyReport(
        equation_label=label,
        numeric_kind=numeric_kind,
        p_samples=samples,
        deviations=tuple(devs),
        max_abs_deviation=max(devs),
        worst_entry=worst[1],
        worst_p=worst[2],
        traces_analytic=tuple(ta),
        traces_numeric=tuple(tn),
        hermiticity_defect=herm_defect,
        hermitian_part_deviation=herm_dev,
        spurious_entries=spurious,
        missing_entries=missing,
    )


def audit_pairs(state_label: str) -> list[tuple[str, str]]:
    """(printed kind, numeric kind) pairs audited for one initial state.

    The printed W three-site state is introduced as non-correlated but is
    named and shaped like the correlated one, so it is checked against both.
    """
    pairs = [(k, k) for k in ("single", "corr2", "corr3", "nc2", "nc3")]
    if state_label.upper() == "W":
        pairs.append(("corr3", "nc3"))
    return pairs
