from enum import Enum

class Method(str, Enum):
    QUADRATURE = "quadrature"
    SERIES     = "series"
    BOTH       = "both"

MethodList = list(Method)
