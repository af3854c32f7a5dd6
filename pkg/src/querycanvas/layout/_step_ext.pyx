# Compiled force step: the O(|V|^2) repulsion sweep dominates layout time,
# so this loop is the one hot kernel in the package.

from libc.math cimport sqrt


def step(double[:, ::1] pos, long long[:, ::1] edges, double d_opt, double r_max,
         double temp, double[:, ::1] disp):
    cdef Py_ssize_t n = pos.shape[0]
    cdef Py_ssize_t m = edges.shape[0]
    cdef Py_ssize_t i, j, e
    cdef long long u, v
    cdef double dx, dy, dist, f, fx, fy, mag, scale
    cdef double rep = d_opt * d_opt

    for i in range(n):
        disp[i, 0] = 0.0
        disp[i, 1] = 0.0

    for i in range(n):
        for j in range(i + 1, n):
            dx = pos[i, 0] - pos[j, 0]
            dy = pos[i, 1] - pos[j, 1]
            dist = sqrt(dx * dx + dy * dy)
            if dist > 0.0 and dist < r_max:
                f = rep / (dist * dist)
                fx = dx * f
                fy = dy * f
                disp[i, 0] += fx
                disp[i, 1] += fy
                disp[j, 0] -= fx
                disp[j, 1] -= fy

    for e in range(m):
        u = edges[e, 0]
        v = edges[e, 1]
        dx = pos[u, 0] - pos[v, 0]
        dy = pos[u, 1] - pos[v, 1]
        dist = sqrt(dx * dx + dy * dy)
        if dist > 0.0:
            f = dist / d_opt
            fx = dx * f
            fy = dy * f
            disp[u, 0] -= fx
            disp[u, 1] -= fy
            disp[v, 0] += fx
            disp[v, 1] += fy

    for i in range(n):
        mag = sqrt(disp[i, 0] * disp[i, 0] + disp[i, 1] * disp[i, 1])
        if mag > temp and mag > 0.0:
            scale = temp / mag
        else:
            scale = 1.0
        pos[i, 0] += disp[i, 0] * scale
        pos[i, 1] += disp[i, 1] * scale
