"""Constant tables shared by the compiled core and the pure-Python fallback."""

from fractions import Fraction
import math

# Even-indexed Bernoulli numbers B_2, B_4, ..., B_50 as (numerator, denominator).
BERNOULLI_EVEN_FRACTIONS = (
    (1, 6),  # B_2
    (-1, 30),  # B_4
    (1, 42),  # B_6
    (-1, 30),  # B_8
    (5, 66),  # B_10
    (-691, 2730),  # B_12
    (7, 6),  # B_14
    (-3617, 510),  # B_16
    (43867, 798),  # B_18
    (-174611, 330),  # B_20
    (854513, 138),  # B_22
    (-236364091, 2730),  # B_24
    (8553103, 6),  # B_26
    (-23749461029, 870),  # B_28
    (8615841276005, 14322),  # B_30
    (-7709321041217, 510),  # B_32
    (2577687858367, 6),  # B_34
    (-26315271553053477373, 1919190),  # B_36
    (2929993913841559, 6),  # B_38
    (-261082718496449122051, 13530),  # B_40
    (1520097643918070802691, 1806),  # B_42
    (-27833269579301024235023, 690),  # B_44
    (596451111593912163277961, 282),  # B_46
    (-5609403368997817686249127547, 46410),  # B_48
    (495057205241079648212477525, 66),  # B_50
)

BERNOULLI_EVEN = tuple(float(Fraction(p, q)) for p, q in BERNOULLI_EVEN_FRACTIONS)

# n! for n = 0..60, rounded once to binary64.
FACTORIALS = tuple(float(math.factorial(n)) for n in range(61))

MAX_POLYGAMMA_ORDER = 30
