"""Weighted cyclic identities with two-sided closed forms.

Each entry stores the per-point summands L(x) and R(x).  Summing them over
the grid x_j = x + (j-1) T/p with weights w_j gives the cyclic identity;
constants in R(x) pick up the factor p automatically.  ``a`` is the spacing
r T/p and ``a1`` the second spacing r2 T/p.
"""

# (id, class, L, R).  Classes F1/F2 live on the 2K grid, F3/F4 on the 4K grid,
# F5/F6 on the 2K grid with alternating weights.
F_TABLE = [
    ("F.e1", "F1",
     "m*cn(x)*(sn(x + a) - sn(x - a))",
     "2*(ns(a) - ds(a))*dn(x)"),
    ("F.e2", "F1",
     "dn(x)**2*(dn(x + a) - dn(x - a))",
     "- 2*m*cs(a)*cn(x)*sn(x)"),
    ("F.ee2", "F1",
     "cn(x)*(cn(x + a)*dn(x + a) - cn(x - a)*dn(x - a))",
     "2*ds(a)*cn(x)*sn(x)"),
    ("F.ee3", "F1",
     "sn(x)*(sn(x + a)*dn(x + a) - sn(x - a)*dn(x - a))",
     "- 2*ns(a)*cn(x)*sn(x)"),
    ("F.e3", "F1",
     "cn(x)*(dn(x + a)*cn(x + a1) - dn(x - a)*cn(x - a1))",
     "0"),
    ("F.e4", "F1",
     "sn(x)*(dn(x + a)*sn(x + a1) - dn(x - a)*sn(x - a1))",
     "0"),
    ("F.e5", "F1",
     "dn(x)*(dn(x + a)*dn(x + a1) - dn(x - a)*dn(x - a1))",
     "0"),
    ("F.e6", "F1",
     "dn(x)*(cn(x + a)*cn(x + a1) - cn(x - a)*cn(x - a1))",
     "0"),
    ("F.e7", "F1",
     "dn(x)*(sn(x + a)*sn(x + a1) - sn(x - a)*sn(x - a1))",
     "0"),
    ("F.e8", "F1",
     "m*dn(x)**2*(cn(x + a)*sn(x + a) - cn(x - a)*sn(x - a))",
     "2*cs(a)*(ns(a)**2 + ds(a)**2 - 2*ns(a)*ds(a))*dn(x)"),
    ("F.e9", "F1",
     "m*cn(x)*dn(x)*(dn(x + a)*sn(x + a) - dn(x - a)*sn(x - a))",
     "- 2*(ns(a)*(cs(a)**2 + ds(a)**2) - ds(a)*(cs(a)**2 + ns(a)**2))*dn(x)"),
    ("F.e10", "F1",
     "dn(x)**3*(dn(x + a)**2 - dn(x - a)**2)",
     "- 2*m*cs(a)*(cs(a)**2 + 2*ds(a)*ns(a))*cn(x)*sn(x)"),
    ("F.e11", "F1",
     "m*cn(x)*sn(x)*dn(x)*(cn(x + a)*sn(x + a) - cn(x - a)*sn(x - a))",
     "2*cs(a)*((ds(a)**2 + ns(a)**2) + ds(a)*ns(a))*cn(x)*sn(x)"),
    ("F.e12", "F1",
     "m*cn(x)*sn(x)*dn(x)*(dn(x + a) - dn(x - a))",
     "2*cs(a)*dn(x)**3 - 2*cs(a)*(ds(a)**2 + 1 - ds(a)*ns(a))*dn(x)"),
    ("F.e13", "F1",
     "m*cn(x)*sn(x)*dn(x)*(dn(x + a)**3 - dn(x - a)**3)",
     "2*cs(a)*(ds(a)*ns(a) - cs(a)**2)*dn(x)**3 + 2*cs(a)*(2*cs(a)**2*ds(a)**2 + ns(a)**2*(2*cs(a)**2 + 3*ds(a)**2) - cs(a)**4 - 2*ds(a)*ns(a)*(ds(a)**2 + cs(a)**2 + ns(a)**2))*dn(x)"),
    ("F.e14", "F1",
     "m*cn(x)*dn(x)*(dn(x + a)*sn(x + a1) - dn(x - a)*sn(x - a1))",
     "2*(ns(a - a1)*cs(a)*(ds(a) - ns(a)) - cs(a - a1)*cs(a1)*(ds(a1) - ns(a1)))*dn(x)"),
    ("F.e15", "F1",
     "m*sn(x)*dn(x)*(dn(x + a)*cn(x + a1) - dn(x - a)*cn(x - a1))",
     "- 2*(ds(a - a1)*cs(a)*(ds(a) - ns(a)) - cs(a - a1)*cs(a1)*(ds(a1) - ns(a1)))*dn(x)"),
    ("F.e16", "F1",
     "m*cn(x)*sn(x)*(dn(x + a)*dn(x + a1) - dn(x - a)*dn(x - a1))",
     "2*cs(a - a1)*(ns(a)*(ds(a) - ns(a)) - ns(a1)*(ds(a1) - ns(a1)))*dn(x)"),
    ("F.e17", "F1",
     "m**2*cn(x)*sn(x)*(sn(x + a)*sn(x + a1) - sn(x - a)*sn(x - a1))",
     "- 2*ns(a - a1)*(ns(a)*(ds(a) - ns(a)) - ns(a1)*(ds(a1) - ns(a1)))*dn(x)"),
    ("F.e18", "F1",
     "m**2*cn(x)*sn(x)*(cn(x + a)*cn(x + a1) - cn(x - a)*cn(x - a1))",
     "2*ds(a - a1)*(ns(a)*(ds(a) - ns(a)) - ns(a1)*(ds(a1) - ns(a1)))*dn(x)"),
    ("F.e10a", "F1",
     "dn(x)**4*(dn(x + a) - dn(x - a))",
     "- 2*m*cs(a)*cn(x)*sn(x)*dn(x)**2 + 2*m*cs(a)**3*cn(x)*sn(x)"),
    ("F.e10b", "F1",
     "m**2*cn(x)**3*(sn(x + a) - sn(x - a))",
     "2*ns(a)*dn(x)**3 - 2*(ns(a)*(2*ds(a)**2 - cs(a)**2) - ds(a)**3)*dn(x)"),
    ("F.e10c", "F1",
     "m**2*sn(x)**3*(cn(x + a) - cn(x - a))",
     "- 2*ds(a)*dn(x)**3 + 2*(ds(a)*(ns(a)**2 + 1) - ns(a)**3)*dn(x)"),
    ("F.e19", "F2",
     "m*sn(x)*dn(x)*(cn(x + a) - cn(x - a))",
     "2*ds(a)*dn(x)**2 - 2*ns(a)*(dn(a) - cs(a)*Z(a))"),
    ("F.e20", "F2",
     "m*cn(x)*dn(x)*(sn(x + a) - sn(x - a))",
     "2*ns(a)*dn(x)**2 - 2*ds(a)*(dn(a) - cs(a)*Z(a))"),
    ("F.e21", "F2",
     "m*sn(x)*cn(x)*(dn(x + a) - dn(x - a))",
     "2*cs(a)*dn(x)**2 - 2*(cs(a) - ds(a)*ns(a)*Z(a))"),
    ("F.e22", "F2",
     "m*dn(x)*(sn(x + a)*cn(x + a1) - sn(x - a)*cn(x - a1))",
     "- 2*ds(a - a1)*(dn(a) - cs(a)*Z(a)) + 2*ns(a - a1)*(dn(a1) - cs(a1)*Z(a1))"),
    ("F.e23", "F2",
     "m*cn(x)*(dn(x + a)*sn(x + a1) - dn(x - a)*sn(x - a1))",
     "-2*ds(a1)*(dn(a1 - a) - cs(a1 - a)*Z(a1 - a)) + 2*ns(a1)*(dn(a) - cs(a)*Z(a))"),
    ("F.e24", "F2",
     "m*sn(x)*(dn(x + a)*cn(x + a1) - dn(x - a)*cn(x - a1))",
     "2*ds(a1)*(dn(a) - cs(a)*Z(a)) - 2*ns(a1)*(dn(a1 - a) - cs(a1 - a)*Z(a1 - a))"),
    ("F.e25", "F2",
     "dn(x)**3*(dn(x + a) - dn(x - a))",
     "- 2*m*cs(a)*dn(x)*sn(x)*cn(x)"),
    ("F.e26", "F2",
     "m*sn(x)**3*(sn(x + a) - sn(x - a))",
     "- 2*ns(a)*dn(x)*sn(x)*cn(x)"),
    ("F.e27", "F2",
     "m*cn(x)**3*(cn(x + a) - cn(x - a))",
     "- 2*ds(a)*dn(x)*sn(x)*cn(x)"),
    ("F.e28", "F2",
     "m*dn(x)**2*(dn(x + a)*sn(x + a)*cn(x + a) - dn(x - a)*sn(x - a)*cn(x - a))",
     "- 6*cs(a)*ds(a)*ns(a)*dn(x)**2 + 2*cs(a)*ds(a)*ns(a)*(dn(a)**2 + 2) - 2*(ns(a)**2*(cs(a)**2 + ds(a)**2) + cs(a)**2*ds(a)**2)*Z(a)"),
    ("F.e29", "F2",
     "m*sn(x)*cn(x)*(dn(x + a)**3 - dn(x - a)**3)",
     "- 2*cs(a)*(ds(a)**2 + ns(a)**2 + cs(a)**2)*dn(x)**2 - 2*cs(a)*(1 - m - 3*ds(a)**2 + 3*cs(a)*ds(a)*ns(a)*Z(a))"),
    ("F.e30", "F2",
     "m**2*dn(x)*cn(x)*(sn(x + a)**3 - sn(x - a)**3)",
     "2*ns(a)*(ds(a)**2 + ns(a)**2 + cs(a)**2)*dn(x)**2 + 2*ns(a)*(1 - m - 3*ds(a)**2 + 3*cs(a)*ds(a)*ns(a)*Z(a))"),
    ("F.e31", "F2",
     "m**2*dn(x)*sn(x)*(cn(x + a)**3 - cn(x - a)**3)",
     "- 2*ds(a)*(ds(a)**2 + ns(a)**2 + cs(a)**2)*dn(x)**2 - 2*ds(a)*(1 - m - 3*ds(a)**2 + 3*cs(a)*ds(a)*ns(a)*Z(a))"),
    ("F.e32", "F3",
     "dn(x)*(cn(x + a) - cn(x - a))",
     "2*(cs(a) - ds(a))*sn(x)"),
    ("F.e33", "F3",
     "m*sn(x)**2*(sn(x + a) - sn(x - a))",
     "- 2*ns(a)*cn(x)*dn(x)"),
    ("F.e34", "F3",
     "cn(x)*(sn(x + a)*cn(x + a1) - sn(x - a)*cn(x - a1))",
     "0"),
    ("F.e35", "F3",
     "dn(x)*(dn(x + a)*sn(x + a1) - dn(x - a)*sn(x - a1))",
     "0"),
    ("F.e36", "F3",
     "sn(x)*(dn(x + a)*dn(x + a1) - dn(x - a)*dn(x - a1))",
     "0"),
    ("F.e37", "F3",
     "sn(x)*(cn(x + a)*cn(x + a1) - cn(x - a)*cn(x - a1))",
     "0"),
    ("F.e38", "F3",
     "sn(x)*(sn(x + a)*sn(x + a1) - sn(x - a)*sn(x - a1))",
     "0"),
    ("F.e39", "F3",
     "dn(x)**2*(cn(x + a)*dn(x + a) - cn(x - a)*dn(x - a))",
     "- 2*ns(a)*(cs(a)**2 + ds(a)**2 - 2*cs(a)*ds(a))*sn(x)"),
    ("F.e40", "F3",
     "m*sn(x)*dn(x)*(cn(x + a)*sn(x + a) - cn(x - a)*sn(x - a))",
     "- 2*(ds(a)*(cs(a)**2 + ns(a)**2) - cs(a)*(ds(a)**2 + ns(a)**2))*sn(x)"),
    ("F.e41", "F3",
     "m**2*sn(x)**3*(sn(x + a)**2 - sn(x - a)**2)",
     "2*ns(a)*(ns(a)**2 + 2*ds(a)*cs(a))*cn(x)*dn(x)"),
    ("F.e42", "F3",
     "m*cn(x)*sn(x)*dn(x)*(cn(x + a)*dn(x + a) - cn(x - a)*dn(x - a))",
     "2*ns(a)*((ds(a)**2 + cs(a)**2) + ds(a)*cs(a))*cn(x)*dn(x)"),
    ("F.e43", "F3",
     "m*cn(x)*sn(x)*dn(x)*(sn(x + a) - sn(x - a))",
     "- 2*m*ns(a)*sn(x)**3 + 2*ns(a)*(( - ds(a)**2 + 1) + ds(a)*cs(a))*sn(x)"),
    ("F.e44", "F3",
     "m**2*cn(x)*sn(x)*dn(x)*(sn(x + a)**3 - sn(x - a)**3)",
     "2*m*ns(a)*(ds(a)*cs(a) - ns(a)**2)*sn(x)**3 - 2*ns(a)*(3*cs(a)**2*ds(a)**2 + ns(a)**2*(2*ds(a)**2 + cs(a)**2 - 1) - 2*ds(a)*cs(a)*(ds(a)**2 + cs(a)**2 + ns(a)**2))*sn(x)"),
    ("F.e45", "F3",
     "m*cn(x)*sn(x)*(dn(x + a)*sn(x + a1) - dn(x - a)*sn(x - a1))",
     "2*(ns(a - a1)*ns(a)*(ds(a) - cs(a)) - cs(a - a1)*ns(a1)*(ds(a1) - cs(a1)))*sn(x)"),
    ("F.e46", "F3",
     "m*sn(x)*dn(x)*(sn(x + a)*cn(x + a1) - sn(x - a)*cn(x - a1))",
     "- 2*(ds(a - a1)*ns(a)*(ds(a) - cs(a)) - ns(a - a1)*ns(a1)*(ds(a1) - cs(a1)))*sn(x)"),
    ("F.e47", "F3",
     "cn(x)*dn(x)*(dn(x + a)*dn(x + a1) - dn(x - a)*dn(x - a1))",
     "- 2*cs(a - a1)*(cs(a)*(ds(a) - cs(a)) - cs(a1)*(ds(a1) - cs(a1)))*sn(x)"),
    ("F.e48", "F3",
     "m*cn(x)*dn(x)*(sn(x + a)*sn(x + a1) - sn(x - a)*sn(x - a1))",
     "- 2*ns(a - a1)*(ds(a)*(ds(a) - cs(a)) - ds(a1)*(ds(a1) - cs(a1)))*sn(x)"),
    ("F.e49", "F3",
     "m*cn(x)*dn(x)*(cn(x + a)*cn(x + a1) - cn(x - a)*cn(x - a1))",
     "2*ds(a - a1)*(ds(a)*(ds(a) - cs(a)) - ds(a1)*(ds(a1) - cs(a1)))*sn(x)"),
    ("F.e41a", "F3",
     "m**2*sn(x)**4*(sn(x + a) - sn(x - a))",
     "2*ns(a)*cn(x)*dn(x)**3 - 2*ns(a)*(ns(a)**2 + 1)*cn(x)*dn(x)"),
    ("F.e41b", "F3",
     "dn(x)**3*(cn(x + a) - cn(x - a))",
     "2*m*ds(a)*sn(x)**3 - 2*(cs(a)**3 - ds(a)*(ns(a)**2 - 2))*sn(x)"),
    ("F.e41c", "F3",
     "m*cn(x)**3*(dn(x + a) - dn(x - a))",
     "2*m*cs(a)*sn(x)**3 - 2*(ds(a)**3 - cs(a)*(ds(a)**2 - m))*sn(x)"),
    ("F.e50", "F4",
     "dn(x)*(sn(x + a) - sn(x - a))",
     "2*(ns(a) - cs(a))*cn(x)"),
    ("F.e51", "F4",
     "m*cn(x)**2*(cn(x + a) - cn(x - a))",
     "- 2*ds(a)*sn(x)*dn(x)"),
    ("F.e52", "F4",
     "sn(x)*(sn(x + a)*cn(x + a1) - sn(x - a)*cn(x - a1))",
     "0"),
    ("F.e53", "F4",
     "dn(x)*(dn(x + a)*cn(x + a1) - dn(x - a)*cn(x - a1))",
     "0"),
    ("F.e54", "F4",
     "cn(x)*(dn(x + a)*dn(x + a1) - dn(x - a)*dn(x - a1))",
     "0"),
    ("F.e55", "F4",
     "cn(x)*(cn(x + a)*cn(x + a1) - cn(x - a)*cn(x - a1))",
     "0"),
    ("F.e56", "F4",
     "cn(x)*(sn(x + a)*sn(x + a1) - sn(x - a)*sn(x - a1))",
     "0"),
    ("F.e57", "F4",
     "dn(x)**2*(sn(x + a)*dn(x + a) - sn(x - a)*dn(x - a))",
     "2*ds(a)*(cs(a)**2 + ns(a)**2 - 2*cs(a)*ns(a))*cn(x)"),
    ("F.e58", "F4",
     "m*cn(x)*dn(x)*(cn(x + a)*sn(x + a) - cn(x - a)*sn(x - a))",
     "2*(cs(a)*(ds(a)**2 + ns(a)**2) - ns(a)*(ds(a)**2 + cs(a)**2))*cn(x)"),
    ("F.e59", "F4",
     "m**2*cn(x)**3*(cn(x + a)**2 - cn(x - a)**2)",
     "- 2*ds(a)*(ds(a)**2 + 2*ns(a)*cs(a))*sn(x)*dn(x)"),
    ("F.e60", "F4",
     "m*cn(x)*sn(x)*dn(x)*(sn(x + a)*dn(x + a) - sn(x - a)*dn(x - a))",
     "2*ds(a)*((ns(a)**2 + cs(a)**2) + ns(a)*cs(a))*sn(x)*dn(x)"),
    ("F.e61", "F4",
     "m*cn(x)*sn(x)*dn(x)*(cn(x + a) - cn(x - a))",
     "2*m*ds(a)*cn(x)**3 - 2*ds(a)*((cs(a)**2 + m) - cs(a)*ns(a))*cn(x)"),
    ("F.e62", "F4",
     "m**2*cn(x)*sn(x)*dn(x)*(cn(x + a)**3 - cn(x - a)**3)",
     "2*m*ds(a)*(ns(a)*cs(a) - ds(a)**2)*cn(x)**3 - 2*ds(a)*(2*cs(a)*ns(a)*(ds(a)**2 + cs(a)**2 + ns(a)**2) - ((2*ds(a)**2 + 3*cs(a)**2)*ns(a)**2 + ds(a)**2*(2*cs(a)**2 - ds(a)**2)))*cn(x)"),
    ("F.e63", "F4",
     "m*cn(x)*sn(x)*(dn(x + a)*cn(x + a1) - dn(x - a)*cn(x - a1))",
     "2*(ds(a - a1)*ds(a)*(ns(a) - cs(a)) - cs(a - a1)*ds(a1)*(ns(a1) - cs(a1)))*cn(x)"),
    ("F.e64", "F4",
     "m*cn(x)*dn(x)*(sn(x + a)*cn(x + a1) - sn(x - a)*cn(x - a1))",
     "- 2*(ds(a - a1)*ds(a)*(ns(a) - cs(a)) - ns(a - a1)*ds(a1)*(ns(a1) - cs(a1)))*cn(x)"),
    ("F.e65", "F4",
     "dn(x)*sn(x)*(dn(x + a)*dn(x + a1) - dn(x - a)*dn(x - a1))",
     "2*cs(a - a1)*(cs(a)*(ns(a) - cs(a)) - cs(a1)*(ns(a1) - cs(a1)))*cn(x)"),
    ("F.e66", "F4",
     "m*dn(x)*sn(x)*(sn(x + a)*sn(x + a1) - sn(x - a)*sn(x - a1))",
     "2*ns(a - a1)*(ns(a)*(ns(a) - cs(a)) - ns(a1)*(ns(a1) - cs(a1)))*cn(x)"),
    ("F.e67", "F4",
     "m*dn(x)*sn(x)*(cn(x + a)*cn(x + a1) - cn(x - a)*cn(x - a1))",
     "- 2*ds(a - a1)*(ns(a)*(ns(a) - cs(a)) - ns(a1)*(ns(a1) - cs(a1)))*cn(x)"),
    ("F.e68a", "F4",
     "m**2*cn(x)**4*(cn(x + a) - cn(x - a))",
     "- 2*ds(a)*sn(x)*dn(x)**3 + 2*ds(a)*(2*ds(a)**2 - cs(a)**2)*sn(x)*dn(x)"),
    ("F.e68b", "F4",
     "dn(x)**3*(sn(x + a) - sn(x - a))",
     "2*m*ns(a)*cn(x)**3 + 2*(cs(a)**3 + ns(a)*(ds(a)**2 - 2*cs(a)**2))*cn(x)"),
    ("F.e68c", "F4",
     "m*sn(x)**3*(dn(x + a) - dn(x - a))",
     "- 2*m*cs(a)*cn(x)**3 - 2*(ns(a)**3 - cs(a)*(ns(a)**2 + m))*cn(x)"),
    ("F.e70a", "F5",
     "m*sn(x)*(cn(x + a) - cn(x - a))",
     "2*(ds(a) + ns(a))*dn(x)"),
    ("F.e69", "F5",
     "dn(x)**2*(dn(x + a) - dn(x - a))",
     "- 2*m*cs(a)*cn(x)*sn(x)"),
    ("F.e70", "F5",
     "cn(x)*dn(x)*(cn(x + a) - cn(x - a))",
     "- 2*ds(a)*cn(x)*sn(x)"),
    ("F.e71", "F5",
     "sn(x)*dn(x)*(sn(x + a) - sn(x - a))",
     "2*ns(a)*cn(x)*sn(x)"),
    ("F.e72", "F5",
     "m*dn(x)**2*(cn(x + a)*sn(x + a) - cn(x - a)*sn(x - a))",
     "2*cs(a)*(ds(a)**2 + ns(a)**2 + 2*ds(a)*ns(a))*dn(x)"),
    ("F.e73", "F5",
     "m*sn(x)*dn(x)*(cn(x + a)*dn(x + a) - cn(x - a)*dn(x - a))",
     "2*(ns(a)*(cs(a)**2 + ds(a)**2) + ds(a)*(cs(a)**2 + ns(a)**2))*dn(x)"),
    ("F.e74", "F6",
     "m*cn(x)*sn(x)*(dn(x + a) - dn(x - a))",
     "2*cs(a)*dn(x)**2"),
    ("F.e75", "F6",
     "m*dn(x)*sn(x)*(cn(x + a) - cn(x - a))",
     "2*ds(a)*dn(x)**2"),
    ("F.e76", "F6",
     "m*cn(x)*dn(x)*(sn(x + a) - sn(x - a))",
     "2*ns(a)*dn(x)**2"),
    ("F.e77", "F6",
     "m*cn(x)*sn(x)*(dn(x + a)**3 - dn(x - a)**3)",
     "2*cs(a)*(ds(a)**2 + 1)*dn(x)**2"),
    ("F.e78", "F6",
     "m**2*dn(x)*sn(x)*(cn(x + a)**3 - cn(x - a)**3)",
     "2*ds(a)*(cs(a)**2 + m)*dn(x)**2"),
    ("F.e79", "F6",
     "m**2*cn(x)*dn(x)*(sn(x + a)**3 - sn(x - a)**3)",
     "2*ns(a)*(1 - ds(a)**2)*dn(x)**2"),
    ("F.e80", "F6",
     "dn(x)**3*(dn(x + a) - dn(x - a))",
     "- 2*m*cs(a)*dn(x)*sn(x)*cn(x) + 4*cs(a)**3*Z(x)"),
    ("F.e81", "F6",
     "m**2*sn(x)**3*(sn(x + a) - sn(x - a))",
     "- 2*m*ns(a)*dn(x)*sn(x)*cn(x) + 4*ns(a)**3*Z(x)"),
    ("F.e82", "F6",
     "m**2*cn(x)**3*(cn(x + a) - cn(x - a))",
     "- 2*m*ds(a)*dn(x)*sn(x)*cn(x) + 4*ds(a)**3*Z(x)"),
    ("F.e83", "F6",
     "dn(x)**3*(dn(x + a)**3 - dn(x - a)**3)",
     "4*m*cs(a)**3*dn(x)*sn(x)*cn(x) - 4*cs(a)*(ns(a)**2*(cs(a)**2 + 3*ds(a)**2) + cs(a)**2*(cs(a)**2 + ds(a)**2))*Z(x)"),
    ("F.e84", "F6",
     "m**3*sn(x)**3*(sn(x + a)**3 - sn(x - a)**3)",
     "- 4*m*ns(a)**3*dn(x)*sn(x)*cn(x) + 4*ns(a)*(ns(a)**2*(cs(a)**2 + ds(a)**2 + ns(a)**2) + 3*cs(a)**2*ds(a)**2)*Z(x)"),
    ("F.e85", "F6",
     "m**3*cn(x)**3*(cn(x + a)**3 - cn(x - a)**3)",
     "4*m*ds(a)**3*dn(x)*sn(x)*cn(x) - 4*ds(a)*(ns(a)**2*(3*cs(a)**2 + ds(a)**2) + ds(a)**2*(cs(a)**2 + ds(a)**2))*Z(x)"),
    ("F.e86", "F6",
     "m**2*dn(x)*sn(x)*cn(x)*(dn(x + a)*sn(x + a)*cn(x + a) - dn(x - a)*sn(x - a)*cn(x - a))",
     "- 4*m*ds(a)*cs(a)*ns(a)*dn(x)*sn(x)*cn(x) + 8*ds(a)*cs(a)*ns(a)*(ns(a)**2 + cs(a)**2 + ds(a)**2)*Z(x)"),
    ("F.e87", "F6",
     "m**2*dn(x)*sn(x)**2*cn(x)*(sn(x + a) - sn(x - a))",
     "- 2*ns(a)*dn(x)**4 + 2*ns(a)*(ds(a)**2 + 1)*dn(x)**2"),
]

# Printed forms that fail direct summation; F_TABLE holds the corrected ones.
F_ERRATA = {
    "F.e13": {
        "printed_rhs": "2*cs(a)*(ds(a)*ns(a) - cs(a)**2)*dn(x)**3 + 2*cs(a)*(2*cs(a)**2*ds(a)**2 + 2*ns(a)**2*(ds(a)**2 + cs(a)**2) - cs(a)**4 - ds(a)*ns(a)*(ds(a)**2 + cs(a)**2 + ns(a)**2))*dn(x)",
        "note": "coefficient of dn(x) disagrees with direct summation",
    },
    "F.e23": {
        "printed_rhs": "2*dc(a)*ns(a - a1)*(dn(a) - cs(a)*Z(a)) - 2*dc(a1)*cs(a - a1)*(dn(a1) - cs(a1)*Z(a1))",
        "note": "printed right side does not close; value obtained by reindexing onto the dn*sn*cn pattern",
    },
    "F.e24": {
        "printed_rhs": "2*nc(a)*ds(a - a1)*(dn(a) - cs(a)*Z(a)) - 2*nc(a1)*cs(a - a1)*(dn(a1) - cs(a1)*Z(a1))",
        "note": "printed right side does not close; value obtained by reindexing onto the dn*sn*cn pattern",
    },
    "F.e43": {
        "printed_rhs": "- 2*m*ns(a)*sn(x)**3 - 2*ns(a)*(( - ds(a)**2 + 1) + ds(a)*ns(a))*sn(x)",
        "note": "sn(x) term has the wrong sign and ns(a) in place of cs(a)",
    },
    "F.e44": {
        "printed_rhs": "2*m*ns(a)*(ds(a)*cs(a) - ns(a)**2)*sn(x)**3 - 2*ns(a)*(3*cs(a)**2*ds(a)**2 + ns(a)**2*(2*ds(a)**2 + cs(a)**2) - 2*ds(a)*cs(a)*(ds(a)**2 + cs(a)**2 + ns(a)**2))*sn(x)",
        "note": "coefficient of sn(x) is off by 2*ns(a)**3",
    },
    "F.e41c": {
        "printed_rhs": "2*m*cs(a)*sn(x)**3 - 2*(ds(a)**3 - cs(a)*(2*ds(a)**2 - 1))*sn(x)",
        "note": "coefficient of sn(x) carries 2*ds^2 - 1 where ds^2 - m is needed",
    },
    "F.e72": {
        "printed_lhs": "dn(x)**2*(cn(x + a)*sn(x + a) - cn(x - a)*sn(x - a))",
        "note": "left side is missing a factor m",
    },
    "F.e73": {
        "printed_lhs": "sn(x)*dn(x)*(cn(x + a)*dn(x + a) - cn(x - a)*dn(x - a))",
        "printed_rhs": "2*(ns(a)*(cs(a)**2 + ds(a)**2) - ds(a)*(cs(a)**2 + ns(a)**2))*cn(x)*sn(x)",
        "note": "left side is missing a factor m; right side is a multiple of dn(x) with both terms added",
    },
    "F.e79": {
        "printed_lhs": "m*cn(x)*dn(x)*(sn(x + a)**3 - sn(x - a)**3)",
        "note": "left side needs m**2 (compare the unweighted analogue)",
    },
    "F.e85": {
        "printed_rhs": "4*m*ds(a)**3*dn(x)*sn(x)*cn(x) - 4*ds(a)*(ns(a)**2*(3*cs(a)**2 + ds(a)**2) + cs(a)**2*(cs(a)**2 + ds(a)**2))*Z(x)",
        "note": "second bracket needs ds(a)**2 in place of cs(a)**2",
    },
}
