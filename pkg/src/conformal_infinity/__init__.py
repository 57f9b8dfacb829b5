"""Compactified Minkowski space in three models (U(2), the (4,2) quadric, twistor planes),
the maps between them, and the surfaces that picture its conformal infinity."""

from .errors import *  # noqa: F401,F403
from .forms import (ProjClass, RayClass, Q_form, conformal_inversion, hex_inner, mink_inner,
                    penrose_inversion, proj_class, q_form, ray_class, same_class)
from .hermitian import (cayley, cayley_inverse, is_at_infinity, lorentz_of, sigma_inverse,
                        sigma_of)
from .su22 import check_membership, moebius_act, random_su22
from .clifford import (GAMMA, clifford_element, apply_antilinear, det_equals_Q_squared,
                       lie_basis, vector_rep, verify_clifford_relation)
from .quadric import (ConePoint, cone_point_of_unitary, embed_minus, embed_plus, infinity_test,
                      quadratic_coords, unitary_of_cone_point)
from .twistor import (IsotropicLine, IsotropicPlane, geodesics_intersect, line_on_plane,
                      plane_of_unitary, planes_through_line, unitary_of_plane)
from .lie_sphere import (InfinityGeodesic, InfinityPoint, Plane, Point, Sphere, classify_ray,
                         geodesic_at_infinity, lie_to_ray, plane_fronts)
from .surfaces import (Curve3, SurfaceMesh, clifford_torus_point, doubled_cyclide, horned_torus,
                       infinity_r3, light_source_project, mesh, segal_orbit, simple_cyclide)

__version__ = "0.1.0"
