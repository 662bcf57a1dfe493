from .rules import composite_nodes, panels_for_phase
from .packet import (
    integrate_packet_weighted,
    integrate_packet_components,
    oracle_riemann,
    phase_swing,
    required_panels,
)
from .halfline import integrate_interval, integrate_halfline
from .radial import integrate_packet_radial, integrate_radial_rows, radial_range, radial_swing
