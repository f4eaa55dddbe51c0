"""Embedded reference dataset for the NFR authentication-method example.

Values are stored as published. The linguistic scale and the interval matrix
drive the computation; the combined numbers and scores are only ever compared
against, never used as inputs to the ranking of the matrix.
"""
from typing import Dict, List, Tuple

Quad = Tuple[float, float, float, float]

# --- Linguistic scale: term -> (truth, indet, falsity) ---
VERY_LOW = "Very Low"
LOW = "Low"
HIGH = "High"
VERY_HIGH = "Very High"

SCALE_TERMS: Dict[str, Tuple[Quad, Quad, Quad]] = {
    VERY_LOW: ((0.0, 0.1, 0.1, 0.2), (0.1, 0.1, 0.1, 0.1), (0.6, 0.7, 0.8, 0.9)),
    LOW: ((0.2, 0.3, 0.4, 0.5), (0.0, 0.1, 0.2, 0.3), (0.0, 0.1, 0.2, 0.2)),
    HIGH: ((0.4, 0.5, 0.6, 0.7), (0.0, 0.1, 0.2, 0.3), (0.1, 0.1, 0.1, 0.1)),
    VERY_HIGH: ((0.7, 0.7, 0.7, 0.7), (0.0, 0.1, 0.2, 0.3), (0.1, 0.1, 0.1, 0.1)),
}

# Usability, performance, reliability, robustness, security.
CRITERIA: List[str] = ["USF", "PER", "REL", "RBS", "SEC"]

# Password, token fob, certificate, fingerprint, iris, smart card, memory card, cookie.
ALTERNATIVES: List[str] = ["PW", "TF", "CT", "FR", "IR", "SM", "MM", "CK"]

ALTERNATIVE_LABELS: Dict[str, str] = {
    "PW": "Password",
    "TF": "Token fob",
    "CT": "Certificate",
    "FR": "Fingerprint",
    "IR": "Iris recognition",
    "SM": "Smart card",
    "MM": "Memory card",
    "CK": "Cookie",
}

_VL, _L, _H, _VH = VERY_LOW, LOW, HIGH, VERY_HIGH

# alternative -> one (lower term, upper term) cell per criterion, in CRITERIA order
INTERVAL_MATRIX: Dict[str, List[Tuple[str, str]]] = {
    "PW": [(_L, _H), (_VL, _VH), (_L, _VH), (_L, _H), (_H, _VH)],
    "TF": [(_VL, _H), (_VL, _VH), (_H, _VH), (_L, _VH), (_L, _H)],
    "CT": [(_VL, _VH), (_H, _VH), (_VL, _VH), (_VL, _VH), (_L, _H)],
    "FR": [(_H, _VH), (_L, _VH), (_VL, _H), (_L, _H), (_H, _VH)],
    "IR": [(_L, _VH), (_H, _VH), (_L, _H), (_L, _VH), (_H, _VH)],
    "SM": [(_L, _VH), (_L, _VH), (_H, _VH), (_H, _VH), (_VL, _H)],
    "MM": [(_VL, _VH), (_VL, _H), (_VL, _VH), (_L, _H), (_H, _VH)],
    "CK": [(_VL, _VH), (_H, _VH), (_H, _VH), (_VL, _H), (_L, _H)],
}

STATED_WEIGHTS: Tuple[float, ...] = (0.2, 0.25, 0.25, 0.1, 0.2)
UNIFORM_WEIGHT = 0.25

# --- Published combined numbers: alternative -> lower (T, I, F), upper (T, I, F) ---
_UPPER_I = (0.0, 0.0562, 0.1337, 0.2220)
_UPPER_F = (0.0562, 0.0562, 0.0562, 0.0562)
_UPPER_T_A = (0.6967, 0.7206, 0.7473, 0.7780)
_UPPER_T_B = (0.7360, 0.7477, 0.7614, 0.7780)

GARBLED_IR_LOWER_FALSITY = "(0.0562, 0.0562, 0,0.0946, 0.0946)"
# Drops the stray "0," token; not authoritative.
REPAIRED_IR_LOWER_FALSITY: Quad = (0.0562, 0.0562, 0.0946, 0.0946)

PUBLISHED_COMBINED: Dict[str, Tuple[Tuple[Quad, Quad, Quad], Tuple[Quad, Quad, Quad]]] = {
    "PW": (
        ((0.2555, 0.3732, 0.4719, 0.5838), (0.0, 0.0562, 0.1125, 0.1687), (0.0, 0.0915, 0.1591, 0.1638)),
        (_UPPER_T_A, _UPPER_I, _UPPER_F),
    ),
    "TF": (
        ((0.2240, 0.3437, 0.4273, 0.5437), (0.0, 0.0562, 0.0946, 0.1282), (0.0, 0.1488, 0.2173, 0.2305)),
        ((0.6880, 0.7134, 0.7436, 0.7780), _UPPER_I, _UPPER_F),
    ),
    "CT": (
        ((0.1676, 0.2893, 0.3533, 0.4736), (0.0, 0.0562, 0.0795, 0.0974), (0.0, 0.2420, 0.3181, 0.3475)),
        (_UPPER_T_B, _UPPER_I, _UPPER_F),
    ),
    "FR": (
        ((0.2592, 0.3786, 0.4611, 0.5783), (0.0, 0.0562, 0.0914, 0.1213), (0.0, 0.1640, 0.2027, 0.2163)),
        ((0.6860, 0.7134, 0.7436, 0.7780), _UPPER_I, _UPPER_F),
    ),
    "IR": (
        ((0.3448, 0.4589, 0.5688, 0.6743), (0.0, 0.0562, 0.1337, 0.2220), REPAIRED_IR_LOWER_FALSITY),
        (_UPPER_T_B, _UPPER_I, _UPPER_F),
    ),
    "SM": (
        ((0.3072, 0.4238, 0.5228, 0.6337), (0.0, 0.0562, 0.1125, 0.1687), (0.0, 0.0915, 0.1337, 0.1377)),
        (_UPPER_T_B, _UPPER_I, _UPPER_F),
    ),
    "MM": (
        ((0.1583, 0.2803, 0.3400, 0.4611), (0.0, 0.0562, 0.0768, 0.0922), (0.0, 0.2667, 0.3409, 0.3746)),
        (_UPPER_T_A, _UPPER_I, _UPPER_F),
    ),
    "CK": (
        ((0.2859, 0.4042, 0.4929, 0.6078), (0.0, 0.0562, 0.0979, 0.1354), (0.0, 0.1350, 0.1705, 0.1797)),
        (_UPPER_T_A, _UPPER_I, _UPPER_F),
    ),
}

# Rows whose published values are known to be garbled in print.
GARBLED_ROWS: Dict[str, str] = {
    "IR": f"lower falsity printed as {GARBLED_IR_LOWER_FALSITY}; repaired to {REPAIRED_IR_LOWER_FALSITY}",
}

PUBLISHED_SCORES: Dict[str, float] = {
    "PW": 0.8016,
    "TF": 0.7895,
    "CT": 0.7720,
    "FR": 0.7962,
    "IR": 0.8232,
    "SM": 0.8156,
    "MM": 0.7593,
    "CK": 0.8051,
}

PUBLISHED_ORDER: List[str] = ["IR", "SM", "CK", "PW", "FR", "TF", "CT", "MM"]

# Stated in prose as the desirable alternative, contradicting the printed order.
PUBLISHED_PROSE_CHOICE = "MM"

# --- Requirement-engineering example sets ---
RELIABILITY_SVNS: Dict[str, Tuple[float, float, float]] = {
    "SECU": (0.2, 0.3, 0.4),
    "MAIN": (0.3, 0.5, 0.6),
    "AVAIL": (0.5, 0.2, 0.3),
}

RECOVERABILITY_SVNS: Dict[str, Tuple[float, float, float]] = {
    "BKUP": (0.7, 0.2, 0.2),
    "MIRR": (0.4, 0.2, 0.4),
}

RELIABILITY_IVNS: Dict[str, Tuple[Tuple[float, float], ...]] = {
    "SECU": ((0.1, 0.3), (0.3, 0.5), (0.5, 0.8)),
    "AVAIL": ((0.1, 0.4), (0.0, 0.2), (0.5, 0.8)),
}

RECOVERABILITY_IVNS: Dict[str, Tuple[Tuple[float, float], ...]] = {
    "BKUP": ((0.1, 0.3), (0.0, 0.2), (0.5, 0.7)),
    "MIRR": ((0.2, 0.4), (0.0, 0.1), (0.4, 0.8)),
}
