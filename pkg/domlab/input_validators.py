# ----------------------------------------------------------
# Domination Lab
# File: domlab/input_validators.py
# ----------------------------------------------------------
# Description:
# Validation for the integer parameters, budgets and comma lists
# that reach the builders and solvers from the CLI or callers.
# Ensures:
#   • Inputs are not None or empty
#   • Inputs are convertible to int/float
#   • Values respect lower bounds and configured caps
# Raises ValidationError for any invalid input.
# ----------------------------------------------------------

from typing import Any, List, Optional

from domlab.exceptions import ValidationError


# ----------------------------------------------------------
# Function: ensure_int
# ----------------------------------------------------------
def ensure_int(value: Any, name: str = "value", minimum: Optional[int] = None,
               maximum: Optional[int] = None) -> int:
    """
    Validate that the given input is an integer within [minimum, maximum].
    Booleans and non-integral floats are rejected.
    """
    if value is None:
        raise ValidationError(f"{name} is required.")

    if isinstance(value, str):
        value = value.strip()
        if not value:
            raise ValidationError(f"{name} cannot be empty or whitespace.")

    if isinstance(value, bool):
        raise ValidationError(f"Invalid integer for {name}: {value}")

    try:
        if isinstance(value, float):
            if not value.is_integer():
                raise ValueError
            number = int(value)
        else:
            number = int(value)
    except (TypeError, ValueError):
        raise ValidationError(f"Invalid integer for {name}: {value}")

    if minimum is not None and number < minimum:
        raise ValidationError(f"{name} must be at least {minimum}, got {number}")
    if maximum is not None and number > maximum:
        raise ValidationError(f"{name} must be at most {maximum}, got {number}")
    return number


# ----------------------------------------------------------
# Function: ensure_budget
# ----------------------------------------------------------
def ensure_budget(value: Any, name: str = "budget") -> float:
    """Validate a positive time budget in seconds."""
    if value is None:
        raise ValidationError(f"{name} is required.")
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise ValidationError(f"Invalid {name}: {value}")
    if not number > 0:
        raise ValidationError(f"{name} must be positive, got {value}")
    return number


# ----------------------------------------------------------
# Function: parse_csv_list
# ----------------------------------------------------------
def parse_csv_list(text: Optional[str], allowed: Optional[List[str]] = None,
                   name: str = "list") -> List[str]:
    """
    Split a comma separated option (e.g. "cubic,kappa") into items,
    rejecting empties and, when `allowed` is given, unknown items.
    """
    if text is None or not text.strip():
        raise ValidationError(f"{name} cannot be empty.")
    items = [item.strip() for item in text.split(",")]
    if any(not item for item in items):
        raise ValidationError(f"{name} contains an empty item: {text!r}")
    if allowed is not None:
        unknown = [item for item in items if item not in allowed]
        if unknown:
            raise ValidationError(
                f"Unknown {name} item(s): {', '.join(unknown)}. "
                f"Choose from: {', '.join(allowed)}"
            )
    return items
