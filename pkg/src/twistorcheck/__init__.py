"""Exact symbolic verification engine for the twistor space of the flat
4-torus: scalars in Q(i)(m, mb), forms in the sigma frame, the Hodge star of
a Hermitian metric, and cohomology-number arithmetic for twistor spaces.
"""
from .scalars import GaussianRational, Polynomial, RationalFunction, PoleError
from .exterior import Form, SIGMA, DZ, wedge, conjugate_form, exterior_derivative, del_delbar, convert_frame, d_oracle
from .hodge import HermitianMetric, antilinear_star, linear_star, harmonicity, volume_form, independence_rank
from .syntax import parse, evaluate, format_form, to_text

__version__ = "0.1.0"
