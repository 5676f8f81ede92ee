"""OBJ export of parametrized patches on a rational grid.

Vertices come from exact evaluation at rational grid points followed by
certified interval rounding, so the file is deterministic for fixed
inputs. Parametrizations over towers without a full real embedding are
refused (NoRealEmbedding propagates from the evaluator).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidInput
from .numeric import default_real_embedding, numeric_eval


def sample_grid(s, n: int, u_range, v_range, tol=Fraction(1, 10 ** 9)) -> list:
    """n*n certified vertex triples, row-major in u then v."""
    if n < 2:
        raise InvalidInput("grid needs at least 2 points per side")
    (u0, u1), (v0, v1) = u_range, v_range
    u0, u1, v0, v1 = (Fraction(q) for q in (u0, u1, v0, v1))
    if u0 >= u1 or v0 >= v1:
        raise InvalidInput("empty parameter box")
    embedding = default_real_embedding(s.tower) if s.tower.height else None
    verts = []
    for iu in range(n):
        uq = u0 + (u1 - u0) * iu / (n - 1)
        for iv in range(n):
            vq = v0 + (v1 - v0) * iv / (n - 1)
            point = {"u": uq, "v": vq}
            verts.append(
                tuple(
                    numeric_eval(c.eval_at(point), embedding, tol).value
                    for c in s.components
                )
            )
    return verts


def export_obj(s, n: int, u_range, v_range, path: str, tol=Fraction(1, 10 ** 9)) -> dict:
    """Write an OBJ quad mesh; returns {'vertices': n*n, 'faces': (n-1)^2}."""
    verts = sample_grid(s, n, u_range, v_range, tol)
    lines = ["# revolutio parametric patch", f"# grid {n}x{n}"]
    for x, y, z in verts:
        lines.append(f"v {x:.12g} {y:.12g} {z:.12g}")
    for iu in range(n - 1):
        for iv in range(n - 1):
            a = iu * n + iv + 1
            b = a + 1
            c = a + n + 1
            d = a + n
            lines.append(f"f {a} {b} {c} {d}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    return {"vertices": n * n, "faces": (n - 1) * (n - 1)}
