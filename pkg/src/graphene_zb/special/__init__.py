from .hermite import N_MAX, HermiteTable, hermite, hermite_imag_scaled
from .bessel import bessel_i, bessel_i_scaled
