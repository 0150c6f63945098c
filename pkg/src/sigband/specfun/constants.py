"""
수치 상수
"""
import math

EULER_GAMMA = 0.57721566490153286061  # Euler-Mascheroni
PI = math.pi
SQRT_PI = 1.77245385090551602730  # sqrt(pi)
SQRT_2PI = 2.50662827463100050242  # sqrt(2*pi)
LN_SQRT_2PI = 0.91893853320467274178  # log(sqrt(2*pi))
SQRTH = 7.07106781186547524401e-1  # sqrt(2)/2
MACHEP = 1.11022302462515654042e-16  # 2**-53
MAXLOG = 7.09782712893383996843e2  # log(2**1024)

FPMIN = 1e-300
MAX_ITER = 100_000
