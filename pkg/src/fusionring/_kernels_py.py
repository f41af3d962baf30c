"""Pure-Python chamber/alcove reduction, used when the compiled module is absent."""
import numpy as np


def reflect_batch(points, simple_roots, theta, comarks, shifted_level):
    """Reduce each row of ``points`` (already rho-shifted) into the dominant
    chamber, or into the fundamental alcove of ``shifted_level`` when it is
    non-negative.

    Returns ``(reduced, signs)``; a sign of 0 marks a point on a wall.
    """
    if shifted_level == 0:
        raise ValueError("shifted level must be positive (affine) or negative (finite)")
    pts = np.asarray(points, dtype=np.int64)
    n, r = pts.shape
    roots = [list(map(int, row)) for row in np.asarray(simple_roots)]
    th = [int(x) for x in theta]
    com = [int(x) for x in comarks]
    affine = shifted_level >= 0
    out = pts.copy()
    signs = np.zeros(n, dtype=np.int64)
    for p in range(n):
        x = [int(v) for v in pts[p]]
        sign = 1
        while True:
            moved = False
            for i in range(r):
                xi = x[i]
                if xi < 0:
                    a = roots[i]
                    for j in range(r):
                        x[j] -= xi * a[j]
                    sign = -sign
                    moved = True
                    break
                if xi == 0:
                    sign = 0
                    break
            if sign == 0:
                break
            if moved:
                continue
            if affine:
                x0 = shifted_level - sum(c * v for c, v in zip(com, x))
                if x0 == 0:
                    sign = 0
                    break
                if x0 < 0:
                    for j in range(r):
                        x[j] += x0 * th[j]
                    sign = -sign
                    continue
            break
        signs[p] = sign
        out[p] = x
    return out, signs
