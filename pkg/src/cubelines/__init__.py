"""Lines, automorphisms and colored isomorphism of the combinatorial cube n^d."""

from .coloring import (CanonicalForm, Coloring, apply_to_coloring, are_isomorphic,
                       canonical_form, orbit_and_stabilizer_size)
from .cube import (Block, CubeParams, Line, LineType, NotALine, PointKind, active_line_count,
                   blocks, classify_point, degree, dim_of_line, edges, enumerate_lines,
                   is_linear_sequence, line_from_type, main_diagonals, type_of_line)
from .group import (Automorphism, CapExceeded, apply, axial, compose, enumerate_group,
                    factor_automorphism, group_order, identity, inverse, is_automorphism,
                    point_map, rotation_generator, value_perm)
from .reduction import (Graph, embed_graph_isomorphism, extract_graph_isomorphism,
                        graph_iso_via_cube, reduce_graph)

__version__ = "0.1.0"
