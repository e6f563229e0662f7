import math
from functools import singledispatch
from typing import Any, Dict, List, Tuple, Union

from umbralab.errors import ParamParseError

ASSIGNMENT_SEPARATOR = ','
LIST_SEPARATOR = ';'     # inside a single value, e.g. coeffs=1;0;1
RANGE_SEPARATOR = '..'
STEP_SEPARATOR = ':'

SIGNIFICANT_DIGITS = 17
DISPLAY_DIGITS = 15

Scalar = Union[int, float]
Value = Union[Scalar, Tuple[float, ...]]

# Parsing

def parse_scalar(text: str) -> Scalar:
    """Integer when the text is an integer literal, float otherwise."""
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        raise ParamParseError(f"not a number: {text!r}")

def parse_value(text: str) -> Value:
    if LIST_SEPARATOR in text:
        return tuple(float(parse_scalar(part)) for part in text.split(LIST_SEPARATOR) if part.strip())
    return parse_scalar(text)

def _split_assignment(item: str) -> Tuple[str, str]:
    name, sep, raw = item.partition('=')
    name = name.strip()
    if not sep or not name or not raw.strip():
        raise ParamParseError(f"expected name=value, got {item!r}")
    return name, raw

def parse_assignments(text: str) -> Dict[str, Value]:
    """'n=2,a=1,coeffs=1;0;1' -> {'n': 2, 'a': 1, 'coeffs': (1.0, 0.0, 1.0)}"""
    params: Dict[str, Value] = {}
    if not text or not text.strip():
        return params
    for item in text.split(ASSIGNMENT_SEPARATOR):
        if not item.strip():
            continue
        name, raw = _split_assignment(item)
        if name in params:
            raise ParamParseError(f"parameter {name} given twice")
        params[name] = parse_value(raw)
    return params

def parse_range(text: str) -> Tuple[str, List[Scalar]]:
    """'n=0..4' or 'x=0..1:0.25' -> (name, inclusive list of values)."""
    name, raw = _split_assignment(text)
    bounds, _, step_text = raw.partition(STEP_SEPARATOR)
    start_text, sep, stop_text = bounds.partition(RANGE_SEPARATOR)
    if not sep:
        raise ParamParseError(f"expected start..stop[:step], got {raw!r}")
    start, stop = parse_scalar(start_text), parse_scalar(stop_text)
    step = parse_scalar(step_text) if step_text.strip() else 1
    if step == 0:
        raise ParamParseError(f"range step for {name} must be non-zero")
    if (stop - start) * step < 0:
        raise ParamParseError(f"range {raw!r} for {name} is empty")
    count = math.floor((stop - start) / step + 1e-9) + 1
    if all(isinstance(v, int) for v in (start, stop, step)):
        values: List[Scalar] = [start + i * step for i in range(count)]
    else:
        values = [float(start) + i * float(step) for i in range(count)]
    return name, values

def parse_list(text: str) -> Tuple[str, List[Value]]:
    """'alpha=0.5,1,2,4' -> ('alpha', [0.5, 1, 2, 4])"""
    name, raw = _split_assignment(text)
    values = [parse_value(part) for part in raw.split(ASSIGNMENT_SEPARATOR) if part.strip()]
    if not values:
        raise ParamParseError(f"list for {name} is empty")
    return name, values

# Formatting

@singledispatch
def format_value(value: Any) -> str:
    """Format a parameter or result value for text output."""
    if value is None:
        return "-"
    return str(value)

@format_value.register(float)
def _(value: float) -> str:
    return f"{value:.{DISPLAY_DIGITS}g}"

@format_value.register(bool)
def _(value: bool) -> str:
    return "true" if value else "false"

@format_value.register(int)
def _(value: int) -> str:
    return str(value)

@format_value.register(tuple)
def _(value: tuple) -> str:
    return LIST_SEPARATOR.join(format_value(v) for v in value)
