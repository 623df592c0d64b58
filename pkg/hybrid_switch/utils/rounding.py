from decimal import ROUND_HALF_UP, Decimal


def round_half_up(num: float, ndigits: int) -> float:
    """Rounds like a printed table does: 37.5 -> 38, 85.714 -> 85.7 at one digit."""
    quantum = Decimal(1).scaleb(-ndigits)
    return float(Decimal(repr(num)).quantize(quantum, rounding=ROUND_HALF_UP))


def percent(numerator: int, denominator: int, ndigits: int) -> float | None:
    """Half-up rounded percentage, or None when the denominator is zero."""
    if denominator == 0:
        return None
    return round_half_up(100.0 * numerator / denominator, ndigits)


def format_percent(value: float | None, ndigits: int) -> str:
    if value is None:
        return "n/a"
    return f"{value:.{ndigits}f}"
