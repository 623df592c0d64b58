from hybrid_switch.utils.pydantic import load_data, load_model, save_dict, save_model
from hybrid_switch.utils.rounding import format_percent, percent, round_half_up
from hybrid_switch.utils.seeding import stable_seed, stream_rng

__all__ = [
    "load_data",
    "load_model",
    "save_dict",
    "save_model",
    "format_percent",
    "percent",
    "round_half_up",
    "stable_seed",
    "stream_rng",
]
