"""
Error types, table schemas, and validators.
"""

from __future__ import annotations

import re

import pandas as pd
import pandera as pa

from . import constants as cs


class MvtwinError(ValueError):
    """
    Base class of every error raised by this package.
    """


class ParseError(MvtwinError):
    """
    Raised on a malformed word token.
    Records the 0-based position of the offending token.
    """

    def __init__(self, message: str, position: int, token: str):
        super().__init__(f"{message} (token {position}: {token!r})")
        self.position = position
        self.token = token


class IndexRangeError(MvtwinError):
    pass


class ContextError(MvtwinError):
    pass


class AlphabetError(MvtwinError):
    pass


class DomainError(MvtwinError):
    pass


class ScaleError(DomainError):
    pass


class ParameterError(DomainError):
    pass


class DimensionError(MvtwinError):
    pass


class SingularMatrixError(MvtwinError):
    pass


class NotApplicableError(MvtwinError):
    pass


class KernelError(MvtwinError):
    pass


NONBLANK_PATTERN = r"(?!\s*$).+"
RATIONAL_PATTERN = r"-?\d+(/\d+)?"

# Result table of every verification
SCHEMA_RESULTS = pa.DataFrameSchema(
    {
        "item": pa.Column(str, pa.Check.str_matches(NONBLANK_PATTERN), unique=True),
        "pass": pa.Column(bool),
        "detail": pa.Column(str),
    },
    strict="filter",
    coerce=True,
)

# Relator table of a presentation
SCHEMA_RELATORS = pa.DataFrameSchema(
    {
        "family": pa.Column(str, pa.Check.str_matches(NONBLANK_PATTERN)),
        "relator": pa.Column(str, unique=True),
        "length": pa.Column(int, pa.Check.ge(0)),
    },
    strict="filter",
    coerce=True,
)

# Kernel elements found by witnesses or search
SCHEMA_KERNEL_WORDS = pa.DataFrameSchema(
    {
        "word": pa.Column(str, pa.Check.str_matches(NONBLANK_PATTERN)),
        "length": pa.Column(int, pa.Check.ge(1)),
        "eval_identity": pa.Column(bool),
        "phi_image": pa.Column(str),
        "psi_image": pa.Column(str),
        "status": pa.Column(str, pa.Check.isin(cs.SEARCH_STATUSES)),
    },
    strict="filter",
    coerce=True,
)


def check_ctx(n: int, k: int, group: str = "mvt") -> None:
    """
    Raise a DomainError if ``n < 2``, ``k < 1``, or the group name is unknown.
    """
    if group not in cs.GROUPS:
        raise DomainError(f"Group must be one of {cs.GROUPS}; got {group!r}")
    if n < 2:
        raise DomainError(f"Need n >= 2; got n={n}")
    if k < 1:
        raise DomainError(f"Need k >= 1; got k={k}")


def check_family(family: str) -> None:
    if family not in cs.FAMILIES:
        raise DomainError(f"Family must be one of {cs.FAMILIES}; got {family!r}")


def check_scale(n: int, bound: int, what: str) -> None:
    """
    Raise a ScaleError if ``n`` exceeds the given bound.
    """
    if n > bound:
        raise ScaleError(f"{what} is limited to n <= {bound}; got n={n}")


def check_results(results: pd.DataFrame) -> pd.DataFrame:
    """
    Return the given result table if it is valid.
    Otherwise, raise a Pandera SchemaError.
    """
    if not isinstance(results, pd.DataFrame):
        raise ValueError("Results must be a DataFrame")

    return SCHEMA_RESULTS.validate(results)


def check_relators(relators: pd.DataFrame) -> pd.DataFrame:
    """
    Return the given relator table if it is valid.
    Otherwise, raise a Pandera SchemaError.
    """
    if not isinstance(relators, pd.DataFrame):
        raise ValueError("Relators must be a DataFrame")

    return SCHEMA_RELATORS.validate(relators)


def check_kernel_words(words: pd.DataFrame) -> pd.DataFrame:
    """
    Return the given table of kernel words if it is valid.
    Otherwise, raise a Pandera SchemaError.
    """
    if not isinstance(words, pd.DataFrame):
        raise ValueError("Kernel words must be a DataFrame")

    return SCHEMA_KERNEL_WORDS.validate(words)


def validate_report(report: dict) -> dict:
    """
    Return the given report dictionary, as produced by
    :meth:`mvtwin.reports.Report.to_dict`, if it is valid.
    Otherwise, raise a ValueError after encountering the first error.
    """
    required = ["task", "ctx", "family", "params", "results", "pass", "seed", "tool_version"]
    missing = [key for key in required if key not in report]
    if missing:
        raise ValueError(f"Report is missing keys {missing}")

    if set(report["ctx"]) != {"n", "k", "group"}:
        raise ValueError("Report context must have exactly the keys n, k, group")

    def check_rational(value):
        if isinstance(value, dict):
            for v in value.values():
                check_rational(v)
        elif isinstance(value, list):
            for v in value:
                check_rational(v)
        elif not (isinstance(value, str) and re.fullmatch(RATIONAL_PATTERN, value)):
            raise ValueError(f"Parameter {value!r} is not a rational string")

    for value in report["params"].values():
        check_rational(value)

    try:
        results = check_results(pd.DataFrame(report["results"], columns=["item", "pass", "detail"]))
    except pa.errors.SchemaError as e:
        raise ValueError(e)

    if list(results["item"]) != sorted(results["item"]):
        raise ValueError("Report results must be sorted by item")

    if report["pass"] != bool(results["pass"].all()):
        raise ValueError("Report pass must be the conjunction of its results")

    return report
