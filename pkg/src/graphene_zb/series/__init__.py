from .moments import MomentTable, moment_table, signed_log_sum
from .series import (
    QUIET_SHELLS,
    evaluate_series,
    series_x,
    series_y,
    series_x2,
    series_y2,
    series_vx,
    series_vy,
    SERIES,
)
