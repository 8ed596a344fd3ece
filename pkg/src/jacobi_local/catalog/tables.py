"""Transcribed identity tables.

Each local entry is (id, lhs, rhs, source) with both sides written in the
Python syntax understood by :func:`jacobi_local.expr.parse`.  Shift symbols are
``a``, ``a1`` (a') and ``a2`` (a'').  Generated once from the source tables and
then checked numerically; see ``ERRATA`` for entries whose printed form fails.
"""

LOCAL_TABLE = [
    ('A.dd',
     'dn(x)*dn(x + a)',
     'dn(a) + cs(a)*(Z(x + a) - Z(x) - Z(a))',
     'rank 2, two arguments'),
    ('A.a2',
     'm*sn(x)*sn(x + a)',
     '- ns(a)*(Z(x + a) - Z(x) - Z(a))',
     'rank 2, two arguments'),
    ('A.a3',
     'm*cn(x)*cn(x + a)',
     'm*cn(a) + ds(a)*(Z(x + a) - Z(x) - Z(a))',
     'rank 2, two arguments'),
    ('A.ds',
     'dn(x)*sn(x + a)',
     'ns(a)*cn(x) - cs(a)*cn(x + a)',
     'rank 2, two arguments'),
    ('A.dc',
     'dn(x)*cn(x + a)',
     '- ds(a)*sn(x) + cs(a)*sn(x + a)',
     'rank 2, two arguments'),
    ('A.sc',
     'm*sn(x)*cn(x + a)',
     'ds(a)*dn(x) - ns(a)*dn(x + a)',
     'rank 2, two arguments'),
    ('B.b20',
     'dn(x)*dn(x + a)*dn(x + a1)',
     '- cs(a)*cs(a1)*dn(x) - cs(a)*cs(a - a1)*dn(x + a) + cs(a1)*cs(a - a1)*dn(x + a1)',
     'rank 3, three arguments'),
    ('B.sss',
     'm*sn(x)*sn(x + a)*sn(x + a1)',
     'ns(a)*ns(a1)*sn(x) + ns(a)*ns(a - a1)*sn(x + a) - ns(a1)*ns(a - a1)*sn(x + a1)',
     'rank 3, three arguments'),
    ('B.ccc',
     'm*cn(x)*cn(x + a)*cn(x + a1)',
     '- ds(a)*ds(a1)*cn(x) - ds(a)*ds(a - a1)*cn(x + a) + ds(a1)*ds(a - a1)*cn(x + a1)',
     'rank 3, three arguments'),
    ('B.dds',
     'dn(x)*dn(x + a)*sn(x + a1)',
     '- cs(a)*ns(a1)*sn(x) - cs(a)*ns(a - a1)*sn(x + a) + cs(a1)*cs(a - a1)*sn(x + a1)',
     'rank 3, three arguments'),
    ('B.ddc',
     'dn(x)*dn(x + a)*cn(x + a1)',
     '- cs(a)*ds(a1)*cn(x) - cs(a)*ds(a - a1)*cn(x + a) + cs(a1)*cs(a - a1)*cn(x + a1)',
     'rank 3, three arguments'),
    ('B.ssd',
     'm*sn(x)*sn(x + a)*dn(x + a1)',
     'ns(a)*cs(a1)*dn(x) + ns(a)*cs(a - a1)*dn(x + a) - ns(a1)*ns(a - a1)*dn(x + a1)',
     'rank 3, three arguments'),
    ('B.ssc',
     'm*sn(x)*sn(x + a)*cn(x + a1)',
     'ns(a)*ds(a1)*cn(x) + ns(a)*ds(a - a1)*cn(x + a) - ns(a1)*ns(a - a1)*cn(x + a1)',
     'rank 3, three arguments'),
    ('B.ccd',
     'm*cn(x)*cn(x + a)*dn(x + a1)',
     '- ds(a)*cs(a1)*dn(x) - ds(a)*cs(a - a1)*dn(x + a) + ds(a1)*ds(a - a1)*dn(x + a1)',
     'rank 3, three arguments'),
    ('B.ccs',
     'm*cn(x)*cn(x + a)*sn(x + a1)',
     '- ds(a)*ns(a1)*sn(x) - ds(a)*ns(a - a1)*sn(x + a) + ds(a1)*ds(a - a1)*sn(x + a1)',
     'rank 3, three arguments'),
    ('B.dsc',
     'm*dn(x)*sn(x + a)*cn(x + a1)',
     '- ds(a - a1)*(dn(a) + cs(a)*(Z(x + a) - Z(x) - Z(a))) + ns(a - a1)*(dn(a1) + cs(a1)*(Z(x + a1) - Z(x) - Z(a1)))',
     'rank 3, three arguments'),
    ('B.r3x2.01',
     'dn(x)**2*dn(x + a)',
     '- cs(a)**2*dn(x + a) + ds(a)*ns(a)*dn(x) - m*cs(a)*cn(x)*sn(x)',
     'rank 3, two arguments'),
    ('B.r3x2.02',
     'm*sn(x)**2*sn(x + a)',
     'ns(a)**2*sn(x + a) - cs(a)*ds(a)*sn(x) - ns(a)*cn(x)*dn(x)',
     'rank 3, two arguments'),
    ('B.r3x2.03',
     'm*cn(x)**2*cn(x + a)',
     '- ds(a)**2*cn(x + a) + cs(a)*ns(a)*cn(x) - ds(a)*sn(x)*dn(x)',
     'rank 3, two arguments'),
    ('B.r3x2.04',
     'dn(x)*sn(x)*dn(x + a)',
     '- cs(a)*ns(a)*sn(x + a) + ds(a)*ns(a)*sn(x) + cs(a)*cn(x)*dn(x)',
     'rank 3, two arguments'),
    ('B.r3x2.05',
     'dn(x)*cn(x)*dn(x + a)',
     '- cs(a)*ds(a)*cn(x + a) + ds(a)*ns(a)*cn(x) - cs(a)*sn(x)*dn(x)',
     'rank 3, two arguments'),
    ('B.r3x2.06',
     'm*dn(x)*sn(x)*sn(x + a)',
     'cs(a)*ns(a)*dn(x + a) - cs(a)*ds(a)*dn(x) + m*ns(a)*cn(x)*sn(x)',
     'rank 3, two arguments'),
    ('B.r3x2.07',
     'm*sn(x)*cn(x)*sn(x + a)',
     'ds(a)*ns(a)*cn(x + a) - cs(a)*ds(a)*cn(x) + ns(a)*sn(x)*dn(x)',
     'rank 3, two arguments'),
    ('B.r3x2.08',
     'm*dn(x)*cn(x)*cn(x + a)',
     '- cs(a)*ds(a)*dn(x + a) + cs(a)*ns(a)*dn(x) - m*ds(a)*cn(x)*sn(x)',
     'rank 3, two arguments'),
    ('B.r3x2.09',
     'm*sn(x)*cn(x)*cn(x + a)',
     '- ds(a)*ns(a)*sn(x + a) + cs(a)*ns(a)*sn(x) + ds(a)*cn(x)*dn(x)',
     'rank 3, two arguments'),
    ('B.r3x2.10',
     'm*dn(x)*sn(x)*cn(x + a)',
     '- ds(a) - cs(a)*ns(a)*(Z(x + a) - Z(x) - Z(a)) + ds(a)*dn(x)**2',
     'rank 3, two arguments'),
    ('B.r3x2.11',
     'm*cn(x)*dn(x)*sn(x + a)',
     '- ds(a)*dn(a) - cs(a)*ds(a)*(Z(x + a) - Z(x) - Z(a)) + ns(a)*dn(x)**2',
     'rank 3, two arguments'),
    ('B.r3x2.12',
     'm*sn(x)*cn(x)*dn(x + a)',
     '- cs(a) - ds(a)*ns(a)*(Z(x + a) - Z(x) - Z(a)) + cs(a)*dn(x)**2',
     'rank 3, two arguments'),
    ('C.dddd',
     'dn(x)*dn(x + a)*dn(x + a1)*dn(x + a2)',
     '- cs(a)*cs(a1)*(dn(a2) + cs(a2)*(Z(x + a2) - Z(x) - Z(a2))) - cs(a)*cs(a - a1)*(dn(a2 - a) + cs(a2 - a)*(Z(x + a2) - Z(x + a) - Z(a2 - a))) + cs(a1)*cs(a - a1)*(dn(a2 - a1) + cs(a2 - a1)*(Z(x + a2) - Z(x + a1) - Z(a2 - a1)))',
     'rank 4, four arguments'),
    ('C.ssss',
     'm**2*sn(x)*sn(x + a)*sn(x + a1)*sn(x + a2)',
     '- ns(a)*ns(a1)*ns(a2)*(Z(x + a2) - Z(x) - Z(a2)) - ns(a)*ns(a - a1)*ns(a2 - a)*(Z(x + a2) - Z(x + a) - Z(a2 - a)) + ns(a1)*ns(a - a1)*ns(a2 - a1)*(Z(x + a2) - Z(x + a1) - Z(a2 - a1))',
     'rank 4, four arguments'),
    ('C.cccc',
     'm**2*cn(x)*cn(x + a)*cn(x + a1)*cn(x + a2)',
     '- ds(a)*ds(a1)*(m*cn(a2) + ds(a2)*(Z(x + a2) - Z(x) - Z(a2))) - ds(a)*ds(a - a1)*(m*cn(a2 - a) + ds(a2 - a)*(Z(x + a2) - Z(x + a) - Z(a2 - a))) + ds(a1)*ds(a - a1)*(m*cn(a2 - a1) + ds(a2 - a1)*(Z(x + a2) - Z(x + a1) - Z(a2 - a1)))',
     'rank 4, four arguments'),
    ('C.ddds',
     'dn(x)*dn(x + a)*dn(x + a1)*sn(x + a2)',
     '- cs(a)*cs(a1)*(ns(a2)*cn(x) - cs(a2)*cn(x + a2)) - cs(a)*cs(a - a1)*(ns(a2 - a)*cn(x + a) - cs(a2 - a)*cn(x + a2)) + cs(a1)*cs(a - a1)*(ns(a2 - a1)*cn(x + a1) - cs(a2 - a1)*cn(x + a2))',
     'rank 4, four arguments'),
    ('C.dddc',
     'dn(x)*dn(x + a)*dn(x + a1)*cn(x + a2)',
     'cs(a)*cs(a1)*(ds(a2)*sn(x) - cs(a2)*sn(x + a2)) + cs(a)*cs(a - a1)*(ds(a2 - a)*sn(x + a) - cs(a2 - a)*sn(x + a2)) - cs(a1)*cs(a - a1)*(ds(a2 - a1)*sn(x + a1) - cs(a2 - a1)*sn(x + a2))',
     'rank 4, four arguments'),
    ('C.sssd',
     'm*sn(x)*sn(x + a)*sn(x + a1)*dn(x + a2)',
     'ns(a)*ns(a1)*(cs(a2)*cn(x) - ns(a2)*cn(x + a2)) + ns(a)*ns(a - a1)*(cs(a2 - a)*cn(x + a) - ns(a2 - a)*cn(x + a2)) - ns(a1)*ns(a - a1)*(cs(a2 - a1)*cn(x + a1) - ns(a2 - a1)*cn(x + a2))',
     'rank 4, four arguments'),
    ('C.sssc',
     'm**2*sn(x)*sn(x + a)*sn(x + a1)*cn(x + a2)',
     'ns(a)*ns(a1)*(ds(a2)*dn(x) - ns(a2)*dn(x + a2)) + ns(a)*ns(a - a1)*(ds(a2 - a)*dn(x + a) - ns(a2 - a)*dn(x + a2)) - ns(a1)*ns(a - a1)*(ds(a2 - a1)*dn(x + a1) - ns(a2 - a1)*dn(x + a2))',
     'rank 4, four arguments'),
    ('C.cccd',
     'm*cn(x)*cn(x + a)*cn(x + a1)*dn(x + a2)',
     'ds(a)*ds(a1)*(cs(a2)*sn(x) - ds(a2)*sn(x + a2)) + ds(a)*ds(a - a1)*(cs(a2 - a)*sn(x + a) - ds(a2 - a)*sn(x + a2)) - ds(a1)*ds(a - a1)*(cs(a2 - a1)*sn(x + a1) - ds(a2 - a1)*sn(x + a2))',
     'rank 4, four arguments'),
    ('C.cccs',
     'm**2*cn(x)*cn(x + a)*cn(x + a1)*sn(x + a2)',
     '- ds(a)*ds(a1)*(ns(a2)*dn(x) - ds(a2)*dn(x + a2)) - ds(a)*ds(a - a1)*(ns(a2 - a)*dn(x + a) - ds(a2 - a)*dn(x + a2)) + ds(a1)*ds(a - a1)*(ns(a2 - a1)*dn(x + a1) - ds(a2 - a1)*dn(x + a2))',
     'rank 4, four arguments'),
    ('C.ddss',
     'm*sn(x)*dn(x + a)*sn(x + a1)*dn(x + a2)',
     'cs(a)*ns(a1)*(dn(a2) + cs(a2)*(Z(x + a2) - Z(x) - Z(a2))) + ns(a)*ns(a - a1)*(dn(a2 - a) + cs(a2 - a)*(Z(x + a2) - Z(x + a) - Z(a2 - a))) - ns(a1)*cs(a - a1)*(dn(a2 - a1) + cs(a2 - a1)*(Z(x + a2) - Z(x + a1) - Z(a2 - a1)))',
     'rank 4, four arguments'),
    ('C.ddcc',
     'm*cn(x)*dn(x + a)*cn(x + a1)*dn(x + a2)',
     '- cs(a)*ds(a1)*(dn(a2) + cs(a2)*(Z(x + a2) - Z(x) - Z(a2))) - ds(a)*ds(a - a1)*(dn(a2 - a) + cs(a2 - a)*(Z(x + a2) - Z(x + a) - Z(a2 - a))) + ds(a1)*cs(a - a1)*(dn(a2 - a1) + cs(a2 - a1)*(Z(x + a2) - Z(x + a1) - Z(a2 - a1)))',
     'rank 4, four arguments'),
    ('C.sscc',
     'm**2*sn(x)*cn(x + a)*cn(x + a1)*sn(x + a2)',
     'ds(a)*ds(a1)*ns(a2)*(Z(x + a2) - Z(x) - Z(a2)) + ns(a)*ds(a - a1)*ns(a2 - a)*(Z(x + a2) - Z(x + a) - Z(a2 - a)) - ns(a1)*ds(a - a1)*ns(a2 - a1)*(Z(x + a2) - Z(x + a1) - Z(a2 - a1))',
     'rank 4, four arguments'),
    ('C.ddsc',
     'm*cn(x)*dn(x + a)*dn(x + a1)*sn(x + a2)',
     '- cs(a)*cs(a1)*(ns(a2)*dn(x) - ds(a2)*dn(x + a2)) - ds(a)*cs(a - a1)*(ns(a2 - a)*dn(x + a) - ds(a2 - a)*dn(x + a2)) + ds(a1)*cs(a - a1)*(ns(a2 - a1)*dn(x + a1) - ds(a2 - a1)*dn(x + a2))',
     'rank 4, four arguments'),
    ('C.ssdc',
     'm*sn(x)*dn(x + a)*sn(x + a1)*cn(x + a2)',
     '- cs(a)*ns(a1)*(ds(a2)*sn(x) - cs(a2)*sn(x + a2)) - ns(a)*ns(a - a1)*(ds(a2 - a)*sn(x + a) - cs(a2 - a)*sn(x + a2)) + ns(a1)*cs(a - a1)*(ds(a2 - a1)*sn(x + a1) - cs(a2 - a1)*sn(x + a2))',
     'rank 4, four arguments'),
    ('C.ccds',
     'm*cn(x)*dn(x + a)*cn(x + a1)*sn(x + a2)',
     '- cs(a)*ds(a1)*(ns(a2)*cn(x) - cs(a2)*cn(x + a2)) - ds(a)*ds(a - a1)*(ns(a2 - a)*cn(x + a) - cs(a2 - a)*cn(x + a2)) + ds(a1)*cs(a - a1)*(ns(a2 - a1)*cn(x + a1) - cs(a2 - a1)*cn(x + a2))',
     'rank 4, four arguments'),
    ('C.c46',
     'dn(x)**2*dn(x + a)*dn(x + a1)',
     '- cs(a)*cs(a - a1)*(dn(a) + cs(a)*(Z(x + a) - Z(x) - Z(a))) + cs(a1)*cs(a - a1)*(dn(a1) + cs(a1)*(Z(x + a1) - Z(x) - Z(a1))) - cs(a)*cs(a1)*dn(x)**2',
     'rank 4, three arguments'),
    ('C.c47',
     'm**2*sn(x)**2*sn(x + a)*sn(x + a1)',
     '- ns(a)**2*ns(a - a1)*(Z(x + a) - Z(x) - Z(a)) + ns(a1)**2*ns(a - a1)*(Z(x + a1) - Z(x) - Z(a1)) + m*ns(a)*ns(a1)*sn(x)**2',
     'rank 4, three arguments'),
    ('C.c48',
     'm**2*cn(x)**2*cn(x + a)*cn(x + a1)',
     '- ds(a)*ds(a - a1)*(m*cn(a) + ds(a)*(Z(x + a) - Z(x) - Z(a))) + ds(a1)*ds(a - a1)*(m*cn(a1) + ds(a1)*(Z(x + a1) - Z(x) - Z(a1))) - m*ds(a)*ds(a1)*cn(x)**2',
     'rank 4, three arguments'),
    ('C.c49',
     'm*dn(x)*sn(x)*dn(x + a)*sn(x + a1)',
     'cs(a)*ns(a)*ns(a - a1)*(Z(x + a) - Z(x) - Z(a)) - cs(a1)*ns(a1)*cs(a - a1)*(Z(x + a1) - Z(x) - Z(a1)) - m*cs(a)*ns(a1)*sn(x)**2',
     'rank 4, three arguments'),
    ('C.c50',
     'm*dn(x)*cn(x)*dn(x + a)*cn(x + a1)',
     '- cs(a)*ds(a - a1)*(m*cn(a) + ds(a)*(Z(x + a) - Z(x) - Z(a))) + cs(a1)*cs(a - a1)*(m*cn(a1) + ds(a1)*(Z(x + a1) - Z(x) - Z(a1))) - m*cs(a)*ds(a1)*cn(x)**2',
     'rank 4, three arguments'),
    ('C.c51',
     'm**2*sn(x)*cn(x)*sn(x + a)*cn(x + a1)',
     'ds(a)*ns(a)*ds(a - a1)*(Z(x + a) - Z(x) - Z(a)) - ds(a1)*ns(a1)*ns(a - a1)*(Z(x + a1) - Z(x) - Z(a1)) - m*ns(a)*ds(a1)*sn(x)**2',
     'rank 4, three arguments'),
    ('C.c52',
     'dn(x)**2*dn(x + a)*sn(x + a1)',
     '- cs(a)*ns(a - a1)*(ns(a)*cn(x) - cs(a)*cn(x + a)) + cs(a1)*cs(a - a1)*(ns(a1)*cn(x) - cs(a1)*cn(x + a1)) - cs(a)*ns(a1)*sn(x)*dn(x)',
     'rank 4, three arguments'),
    ('C.c53',
     'dn(x)**2*dn(x + a)*cn(x + a1)',
     'cs(a)*ds(a - a1)*(ds(a)*sn(x) - cs(a)*sn(x + a)) - cs(a1)*cs(a - a1)*(ds(a1)*sn(x) - cs(a1)*sn(x + a1)) - cs(a)*ds(a1)*cn(x)*dn(x)',
     'rank 4, three arguments'),
    ('C.c54',
     'm**2*cn(x)**2*sn(x + a)*cn(x + a1)',
     '- ds(a)*ds(a - a1)*(ns(a)*dn(x) - ds(a)*dn(x + a)) + ds(a1)*ns(a - a1)*(ns(a1)*dn(x) - ds(a1)*dn(x + a1)) - m*ns(a)*ds(a1)*cn(x)*sn(x)',
     'rank 4, three arguments'),
    ('C.c55',
     'm*dn(x)*sn(x)*sn(x + a)*cn(x + a1)',
     '- ns(a)*ds(a - a1)*(ds(a)*sn(x) - cs(a)*sn(x + a)) + ns(a1)*ns(a - a1)*(ds(a1)*sn(x) - cs(a1)*sn(x + a1)) + ns(a)*ds(a1)*cn(x)*dn(x)',
     'rank 4, three arguments'),
    ('C.c56',
     'm*dn(x)*sn(x)*dn(x + a)*cn(x + a1)',
     '- cs(a)*ds(a - a1)*(ds(a)*dn(x) - ns(a)*dn(x + a)) + cs(a1)*cs(a - a1)*(ds(a1)*dn(x) - ns(a1)*dn(x + a1)) - m*cs(a)*ds(a1)*cn(x)*sn(x)',
     'rank 4, three arguments'),
    ('C.c57',
     'dn(x)*sn(x)*dn(x + a)*dn(x + a1)',
     '- cs(a)*cs(a - a1)*(cs(a)*cn(x) - ns(a)*cn(x + a)) + cs(a1)*cs(a - a1)*(cs(a1)*cn(x) - ns(a1)*cn(x + a1)) - cs(a)*cs(a1)*sn(x)*dn(x)',
     'rank 4, three arguments'),
    ('C.c58',
     'm*dn(x)*sn(x)*sn(x + a)*sn(x + a1)',
     'ns(a)*ns(a - a1)*(ns(a)*cn(x) - cs(a)*cn(x + a)) - ns(a1)*ns(a - a1)*(ns(a1)*cn(x) - cs(a1)*cn(x + a1)) + ns(a)*ns(a1)*sn(x)*dn(x)',
     'rank 4, three arguments'),
    ('C.c59',
     'm*dn(x)*sn(x)*cn(x + a)*cn(x + a1)',
     '- ns(a)*ds(a - a1)*(ns(a)*cn(x) - cs(a)*cn(x + a)) + ns(a1)*ds(a - a1)*(ns(a1)*cn(x) - cs(a1)*cn(x + a1)) - ds(a)*ds(a1)*sn(x)*dn(x)',
     'rank 4, three arguments'),
    ('C.c60',
     'm*dn(x)*cn(x)*sn(x + a)*cn(x + a1)',
     '- ds(a)*ds(a - a1)*(ns(a)*cn(x) - cs(a)*cn(x + a)) + ds(a1)*ns(a - a1)*(ns(a1)*cn(x) - cs(a1)*cn(x + a1)) - ns(a)*ds(a1)*sn(x)*dn(x)',
     'rank 4, three arguments'),
    ('C.c61',
     'm*dn(x)*cn(x)*dn(x + a)*sn(x + a1)',
     '- cs(a)*ns(a - a1)*(ns(a)*dn(x) - ds(a)*dn(x + a)) + cs(a1)*cs(a - a1)*(ns(a1)*dn(x) - ds(a1)*dn(x + a1)) - m*cs(a)*ns(a1)*cn(x)*sn(x)',
     'rank 4, three arguments'),
    ('C.c62',
     'dn(x)*cn(x)*dn(x + a)*dn(x + a1)',
     'cs(a)*cs(a - a1)*(cs(a)*sn(x) - ds(a)*sn(x + a)) - cs(a1)*cs(a - a1)*(cs(a1)*sn(x) - ds(a1)*sn(x + a1)) - cs(a)*cs(a1)*cn(x)*dn(x)',
     'rank 4, three arguments'),
    ('C.c63',
     'm*dn(x)*cn(x)*sn(x + a)*sn(x + a1)',
     '- ds(a)*ns(a - a1)*(ds(a)*sn(x) - cs(a)*sn(x + a)) + ds(a1)*ns(a - a1)*(ds(a1)*sn(x) - cs(a1)*sn(x + a1)) + ns(a)*ns(a1)*cn(x)*dn(x)',
     'rank 4, three arguments'),
    ('C.c64',
     'm*dn(x)*cn(x)*cn(x + a)*cn(x + a1)',
     'ds(a)*ds(a - a1)*(ds(a)*sn(x) - cs(a)*sn(x + a)) - ds(a1)*ds(a - a1)*(ds(a1)*sn(x) - cs(a1)*sn(x + a1)) - ds(a)*ds(a1)*cn(x)*dn(x)',
     'rank 4, three arguments'),
    ('C.c65',
     'm**2*sn(x)*cn(x)*sn(x + a)*sn(x + a1)',
     'ds(a)*ns(a - a1)*(ds(a)*dn(x) - ns(a)*dn(x + a)) - ds(a1)*ns(a - a1)*(ds(a1)*dn(x) - ns(a1)*dn(x + a1)) + m*ns(a)*ns(a1)*sn(x)*cn(x)',
     'rank 4, three arguments'),
    ('C.c66',
     'm*sn(x)*cn(x)*dn(x + a)*dn(x + a1)',
     '- ns(a)*cs(a - a1)*(ns(a)*dn(x) - ds(a)*dn(x + a)) + ns(a1)*cs(a - a1)*(ns(a1)*dn(x) - ds(a1)*dn(x + a1)) - m*cs(a)*cs(a1)*cn(x)*sn(x)',
     'rank 4, three arguments'),
    ('C.c67',
     'm**2*sn(x)*cn(x)*cn(x + a)*cn(x + a1)',
     '- ns(a)*ds(a - a1)*(ns(a)*dn(x) - ds(a)*dn(x + a)) + ns(a1)*ds(a - a1)*(ns(a1)*dn(x) - ds(a1)*dn(x + a1)) - m*ds(a)*ds(a1)*cn(x)*sn(x)',
     'rank 4, three arguments'),
    ('C.c68',
     'm*sn(x)*cn(x)*dn(x + a)*sn(x + a1)',
     '- ns(a)*ns(a - a1)*(cs(a)*sn(x) - ds(a)*sn(x + a)) + ns(a1)*cs(a - a1)*(cs(a1)*sn(x) - ds(a1)*sn(x + a1)) + cs(a)*ns(a1)*cn(x)*dn(x)',
     'rank 4, three arguments'),
    ('C.c69',
     'm*sn(x)*cn(x)*dn(x + a)*cn(x + a1)',
     '- ds(a)*ds(a - a1)*(cs(a)*cn(x) - ns(a)*cn(x + a)) + ds(a1)*cs(a - a1)*(cs(a1)*cn(x) - ns(a1)*cn(x + a1)) - cs(a)*ds(a1)*sn(x)*dn(x)',
     'rank 4, three arguments'),
    ('C.r4x2.01',
     'm*dn(x)*sn(x)*cn(x)*dn(x + a)',
     '- cs(a)*(ds(a)**2 + 1)*dn(x) + cs(a)*ds(a)*ns(a)*dn(x + a) + cs(a)*dn(x)**3 + m*ds(a)*ns(a)*cn(x)*sn(x)',
     'rank 4, two arguments'),
    ('C.r4x2.02',
     'm*dn(x)*sn(x)*cn(x)*sn(x + a)',
     '- ns(a)*(ds(a)**2 - 1)*sn(x) + cs(a)*ds(a)*ns(a)*sn(x + a) - m*ns(a)*sn(x)**3 - cs(a)*ds(a)*cn(x)*dn(x)',
     'rank 4, two arguments'),
    ('C.r4x2.03',
     'm*dn(x)*sn(x)*cn(x)*cn(x + a)',
     '- ds(a)*(m + cs(a)**2)*cn(x) + cs(a)*ds(a)*ns(a)*cn(x + a) + m*ds(a)*cn(x)**3 + cs(a)*ns(a)*sn(x)*dn(x)',
     'rank 4, two arguments'),
    ('C.r4x2.04',
     'dn(x)**3*dn(x + a)',
     '- m*cs(a)*sn(x)*cn(x)*dn(x) + ds(a)*ns(a)*dn(x)**2 - cs(a)**2*dn(a) - cs(a)**3*(Z(x + a) - Z(x) - Z(a))',
     'rank 4, two arguments'),
    ('C.r4x2.05',
     'dn(x)**3*sn(x + a)',
     'cs(a)**3*cn(x + a) - ns(a)*(2*cs(a)**2 - ds(a)**2)*cn(x) + cs(a)*ds(a)*sn(x)*dn(x) + m*ns(a)*cn(x)**3',
     'rank 4, two arguments'),
    ('C.r4x2.06',
     'dn(x)**3*cn(x + a)',
     '- cs(a)**3*sn(x + a) - ds(a)*(2 - ns(a)**2)*sn(x) + cs(a)*ns(a)*cn(x)*dn(x) + m*ds(a)*sn(x)**3',
     'rank 4, two arguments'),
    ('C.r4x2.07',
     'm*sn(x)**3*dn(x + a)',
     '- ns(a)**3*cn(x + a) + (m + ns(a)**2)*cs(a)*cn(x) - ds(a)*ns(a)*sn(x)*dn(x) - m*cs(a)*cn(x)**3',
     'rank 4, two arguments'),
    ('C.r4x2.08',
     'm**2*sn(x)**3*sn(x + a)',
     '- m*ns(a)*sn(x)*cn(x)*dn(x) + cs(a)*ds(a)*dn(x)**2 - cs(a)*ds(a) - ns(a)**3*(Z(x + a) - Z(x) - Z(a))',
     'rank 4, two arguments'),
    ('C.r4x2.09',
     'm**2*sn(x)**3*cn(x + a)',
     '(1 + ns(a)**2)*ds(a)*dn(x) - ns(a)**3*dn(x + a) - m*cs(a)*ns(a)*sn(x)*cn(x) - ds(a)*dn(x)**3',
     'rank 4, two arguments'),
    ('C.r4x2.10',
     'm*cn(x)**3*dn(x + a)',
     '- ds(a)**3*sn(x + a) + (2*ds(a)**2 - ns(a)**2)*cs(a)*sn(x) + ds(a)*ns(a)*cn(x)*dn(x) + m*cs(a)*sn(x)**3',
     'rank 4, two arguments'),
    ('C.r4x2.11',
     'm**2*cn(x)**3*sn(x + a)',
     'ds(a)**3*dn(x + a) - (2*ds(a)**2 - cs(a)**2)*ns(a)*dn(x) + m*cs(a)*ds(a)*sn(x)*cn(x) + ns(a)*dn(x)**3',
     'rank 4, two arguments'),
    ('C.r4x2.12',
     'm**2*cn(x)**3*cn(x + a)',
     '- m*ds(a)*sn(x)*cn(x)*dn(x) + cs(a)*ns(a)*dn(x)**2 - cs(a)*ns(a)*(1 - m + m*dn(a)**2) - ds(a)**3*(Z(x + a) - Z(x) - Z(a))',
     'rank 4, two arguments'),
    ('C.c15',
     'dn(x)**2*dn(x + a)**2',
     '- cs(a)**2*(dn(x)**2 + dn(x + a)**2) + (ds(a)**2 + cs(a)**2) + 2*cs(a)*ds(a)*ns(a)*(Z(x + a) - Z(x) - Z(a))',
     'rank 4, two arguments'),
    ('C.r4x2.13',
     'm*dn(x)**2*sn(x + a)*cn(x + a)',
     'cs(a)*(ds(a)**2 + ns(a)**2)*dn(x) - 2*cs(a)*ds(a)*ns(a)*dn(x + a) - m*cs(a)**2*sn(x + a)*cn(x + a) - m*ds(a)*ns(a)*cn(x)*sn(x)',
     'rank 4, two arguments'),
    ('C.r4x2.14',
     'm*sn(x)**2*dn(x + a)*cn(x + a)',
     'ns(a)*(cs(a)**2 + ds(a)**2)*sn(x) - 2*cs(a)*ds(a)*ns(a)*sn(x + a) + ns(a)**2*cn(x + a)*dn(x + a) + cs(a)*ds(a)*cn(x)*dn(x)',
     'rank 4, two arguments'),
    ('C.r4x2.15',
     'm*cn(x)**2*dn(x + a)*sn(x + a)',
     'ds(a)*(cs(a)**2 + ns(a)**2)*cn(x) - 2*cs(a)*ds(a)*ns(a)*cn(x + a) - ds(a)**2*sn(x + a)*dn(x + a) - cs(a)*ns(a)*sn(x)*dn(x)',
     'rank 4, two arguments'),
    ('C.r4x2.16',
     'm**2*sn(x)*cn(x)*sn(x + a)*cn(x + a)',
     'ds(a)*ns(a)*(dn(x)**2 + dn(x + a)**2) - (ds(a)**2 + ns(a)**2)*(dn(a) + cs(a)*(Z(x + a) - Z(x) - Z(a)))',
     'rank 4, two arguments'),
    ('C.r4x2.17',
     'm*dn(x)*sn(x)*dn(x + a)*sn(x + a)',
     '- cs(a)*ns(a)*(1 + dn(a)**2) + cs(a)*ns(a)*(dn(x)**2 + dn(x + a)**2) - ds(a)*(cs(a)**2 + ns(a)**2)*(Z(x + a) - Z(x) - Z(a))',
     'rank 4, two arguments'),
    ('C.r4x2.18',
     'm*dn(x)*cn(x)*dn(x + a)*cn(x + a)',
     '2*cs(a)*ds(a) - cs(a)*ds(a)*(dn(x)**2 + dn(x + a)**2) + ns(a)*(ds(a)**2 + cs(a)**2)*(Z(x + a) - Z(x) - Z(a))',
     'rank 4, two arguments'),
    ('C.r4x2.19',
     'm*dn(x)*cn(x)*dn(x + a)*sn(x + a)',
     'ds(a)*(cs(a)**2 + ns(a)**2)*dn(x) - ns(a)*(cs(a)**2 + ds(a)**2)*dn(x + a) - m*cs(a)*ds(a)*sn(x + a)*cn(x + a) - m*cs(a)*ns(a)*cn(x)*sn(x)',
     'rank 4, two arguments'),
    ('C.r4x2.20',
     'm*dn(x)*cn(x)*sn(x + a)*cn(x + a)',
     'cs(a)*(ds(a)**2 + ns(a)**2)*cn(x) - ns(a)*(cs(a)**2 + ds(a)**2)*cn(x + a) - cs(a)*ds(a)*sn(x + a)*dn(x + a) - ds(a)*ns(a)*sn(x)*dn(x)',
     'rank 4, two arguments'),
    ('C.r4x2.21',
     'm*sn(x)*cn(x)*dn(x + a)*sn(x + a)',
     'ds(a)*(cs(a)**2 + ns(a)**2)*sn(x) - cs(a)*(ds(a)**2 + ns(a)**2)*sn(x + a) + ds(a)*ns(a)*cn(x + a)*dn(x + a) + cs(a)*ns(a)*cn(x)*dn(x)',
     'rank 4, two arguments'),
    ('D.dscds',
     'm*dn(x)*sn(x)*cn(x)*dn(x + a)*sn(x + a)',
     '- cs(a)*ns(a)*(cs(a)**2 + ds(a)**2 + ns(a)**2)*cn(x) + (ns(a)**2*(ds(a)**2 + cs(a)**2) + cs(a)**2*ds(a)**2)*cn(x + a) + cs(a)*ds(a)*ns(a)*sn(x + a)*dn(x + a) + ds(a)*(cs(a)**2 + ns(a)**2)*sn(x)*dn(x) + m*cs(a)*ns(a)*cn(x)**3',
     'rank 5, two arguments'),
    ('D.dscdc',
     'm*dn(x)*sn(x)*cn(x)*dn(x + a)*cn(x + a)',
     'cs(a)*ds(a)*(cs(a)**2 + ds(a)**2 + ns(a)**2)*sn(x) - (ns(a)**2*(ds(a)**2 + cs(a)**2) + cs(a)**2*ds(a)**2)*sn(x + a) + cs(a)*ds(a)*ns(a)*cn(x + a)*dn(x + a) + ns(a)*(cs(a)**2 + ds(a)**2)*cn(x)*dn(x) + m*cs(a)*ds(a)*sn(x)**3',
     'rank 5, two arguments'),
    ('D.dscsc',
     'm**2*dn(x)*sn(x)*cn(x)*sn(x + a)*cn(x + a)',
     '- ds(a)*ns(a)*(cs(a)**2 + ds(a)**2 + ns(a)**2)*dn(x) + (ns(a)**2*(ds(a)**2 + cs(a)**2) + cs(a)**2*ds(a)**2)*dn(x + a) + m*cs(a)*ds(a)*ns(a)*cn(x + a)*sn(x + a) + m*cs(a)*(ds(a)**2 + ns(a)**2)*cn(x)*sn(x) + ds(a)*ns(a)*dn(x)**3',
     'rank 5, two arguments'),
    ('D.dscdd',
     'm*dn(x)*sn(x)*cn(x)*dn(x + a)**2',
     'cs(a)*ds(a)*ns(a)*(dn(x + a)**2 + 2*dn(x)**2 - dn(a)**2 - 2) - m*cs(a)**2*dn(x)*sn(x)*cn(x) - (ns(a)**2*(ds(a)**2 + cs(a)**2) + cs(a)**2*ds(a)**2)*(Z(x + a) - Z(x) - Z(a))',
     'rank 5, two arguments'),
]


SECTION_TABLE = [
    ("2.5",
     "dn(x)*(dn(x + a) + dn(x - a))",
     "2*dn(a) + cs(a)*(Z(x + a) - Z(x - a) - 2*Z(a))",
     "rank 2, symmetric shifts"),
    ("2.8",
     "dn(x)*(dn(x + a) - dn(x - a))",
     "cs(a)*(Z(x + a) + Z(x - a) - 2*Z(x))",
     "rank 2, antisymmetric shifts"),
    ("2.9",
     "dn(x)*dn(x + a)",
     "dn(a) + cs(a)*(Z(x + a) - Z(x) - Z(a))",
     "rank 2, two arguments"),
    ("2.99",
     "dn(x)*dn(x - a)",
     "dn(a) - cs(a)*(Z(x - a) - Z(x) + Z(a))",
     "rank 2, two arguments"),
    ("2.11",
     "m*cn(x)*(sn(x + a) - sn(x - a))",
     "2*ns(a)*dn(x) - ds(a)*(dn(x + a) + dn(x - a))",
     "rank 2, antisymmetric shifts"),
    ("3.1",
     "dn(x)**2*(dn(x + a) + dn(x - a))",
     "A*dn(x) + B*(dn(x + a) + dn(x - a))",
     "rank 3, symmetric shifts"),
    ("3.7",
     "dn(x)**2*(dn(x + a) - dn(x - a))",
     "D*cn(x)*sn(x) + B*(dn(x + a) - dn(x - a))",
     "rank 3, antisymmetric shifts"),
    ("5.9",
     "dn(x)**2*dn(x + a)",
     "B*dn(x + a) + ds(a)*ns(a)*dn(x) - m*cs(a)*sn(x)*cn(x)",
     "rank 3, two arguments"),
    ("5.14",
     "dn(x)*(dn(x + a) + dn(x - a))",
     "2*dn(a)*(1 - m*sn(x)**2)/(1 - m*sn(a)**2*sn(x)**2)",
     "rank 2, rational form"),
    # generalized addition theorems: first argument x, second argument x + a
    ("6.8",
     "dn(x - (x + a))*sn(x)*sn(x + a) + cn(x)*cn(x + a)",
     "cn(x - (x + a))",
     "addition theorem, two arguments"),
    ("6.9",
     "dn(x - (x + a))*sn(x)*cn(x + a) - cn(x)*sn(x + a)",
     "dn(x)*sn(x - (x + a))",
     "addition theorem, two arguments"),
]

# Constants shared by the rank-lifting families.
COEFFS = {
    "A": "2*ds(a)*ns(a)",
    "B": "-cs(a)**2",
    "B1": "ns(a)**2",
    "B2": "-ds(a)**2",
    "D": "-2*m*cs(a)",
    "W": "(Z(x + a) - Z(x) - Z(a))",
}

# Families indexed by n >= 1; ``k`` is the summation index inside Sum(...).
FAMILY_TABLE = [
    ("E.e01",
     "dn(x)**(2*n)*dn(x + a)",
     "B**n*dn(x + a) + (ds(a)*ns(a)*dn(x) - m*cs(a)*cn(x)*sn(x))"
     "*Sum(lambda k: B**(k - 1)*dn(x)**(2*(n - k)), 1, n)"),
    ("E.e02",
     "dn(x)**(2*n + 1)*dn(x + a)",
     "B**n*(dn(a) + cs(a)*W) + (ds(a)*ns(a)*dn(x) - m*cs(a)*cn(x)*sn(x))"
     "*Sum(lambda k: B**(k - 1)*dn(x)**(2*(n - k) + 1), 1, n)"),
    ("E.e03",
     "m**n*sn(x)**(2*n)*sn(x + a)",
     "B1**n*sn(x + a) - (cs(a)*ds(a)*sn(x) + ns(a)*cn(x)*dn(x))"
     "*Sum(lambda k: m**(n - k)*B1**(k - 1)*sn(x)**(2*(n - k)), 1, n)"),
    ("E.e04",
     "m**(n + 1)*sn(x)**(2*n + 1)*sn(x + a)",
     "-B1**n*ns(a)*W - (cs(a)*ds(a)*sn(x) + ns(a)*cn(x)*dn(x))"
     "*Sum(lambda k: m**(n - k + 1)*B1**(k - 1)*sn(x)**(2*(n - k) + 1), 1, n)"),
    ("E.e05",
     "m**n*cn(x)**(2*n)*cn(x + a)",
     "B2**n*cn(x + a) + (cs(a)*ns(a)*cn(x) - ds(a)*sn(x)*dn(x))"
     "*Sum(lambda k: m**(n - k)*B2**(k - 1)*cn(x)**(2*(n - k)), 1, n)"),
    ("E.e06",
     "m**(n + 1)*cn(x)**(2*n + 1)*cn(x + a)",
     "B2**n*(m*cn(a) + ds(a)*W) + (cs(a)*ns(a)*cn(x) - ds(a)*sn(x)*dn(x))"
     "*Sum(lambda k: m**(n - k + 1)*B2**(k - 1)*cn(x)**(2*(n - k) + 1), 1, n)"),
    ("E.e07",
     "m**n*cn(x)**(2*n)*sn(x)*dn(x + a)",
     "-B2**n*ns(a)*cn(x + a) + cs(a)*m**n*cn(x)**(2*n + 1)"
     " - ns(a)*(cs(a)*ns(a)*cn(x) - ds(a)*sn(x)*dn(x))"
     "*Sum(lambda k: m**(n - k)*B2**(k - 1)*cn(x)**(2*(n - k)), 1, n)"),
    ("E.e08",
     "m**n*sn(x)**(2*n)*cn(x)*dn(x + a)",
     "B1**n*ds(a)*sn(x + a) - cs(a)*m**n*sn(x)**(2*n + 1)"
     " - ds(a)*(cs(a)*ds(a)*sn(x) + ns(a)*cn(x)*dn(x))"
     "*Sum(lambda k: m**(n - k)*B1**(k - 1)*sn(x)**(2*(n - k)), 1, n)"),
    ("E.e09",
     "m*dn(x)**(2*n)*cn(x)*sn(x + a)",
     "-B**n*ds(a)*dn(x + a) + ns(a)*dn(x)**(2*n + 1)"
     " - ds(a)*(ds(a)*ns(a)*dn(x) - m*cs(a)*cn(x)*sn(x))"
     "*Sum(lambda k: B**(k - 1)*dn(x)**(2*(n - k)), 1, n)"),
    ("E.e10",
     "m*dn(x)**(2*n)*sn(x + a)*cn(x + a)",
     "m*B**n*sn(x + a)*cn(x + a) - 2*n*B**(n - 1)*ds(a)*cs(a)*ns(a)*dn(x + a)"
     " + Sum(lambda k: B**(k - 1)*((m + 2*ds(a)**2)*cs(a) + 2*(k - 1)*ds(a)**2*nc(a)*ns(a))"
     "*dn(x)**(2*(n - k) + 1), 1, n)"
     " - m*ds(a)*ns(a)*Sum(lambda k: (2*k - 1)*B**(k - 1)*cn(x)*sn(x)*dn(x)**(2*(n - k)), 1, n)"),
    ("E.e11",
     "m*dn(x)**(2*n + 1)*sn(x + a)*cn(x + a)",
     "-m*ds(a)*ns(a)*Sum(lambda k: (2*k - 1)*B**(k - 1)*cn(x)*sn(x)*dn(x)**(2*(n - k) + 1), 1, n)"
     " + B**(n - 1)*cs(a)*((1 - m) - (2*n + 1)*ds(a)*ns(a)*(dn(a) + cs(a)*W))"
     " + Sum(lambda k: B**(k - 1)*((m + 2*ds(a)**2)*cs(a) + 2*(k - 1)*ds(a)**2*nc(a)*ns(a))"
     "*dn(x)**(2*(n - k + 1)), 1, n)"
     " - B**n*cs(a)*dn(x + a)**2"),
    ("E.d26",
     "dn(x)**(2*n)*sn(x + a)*dn(x + a)",
     "B**n*sn(x + a)*dn(x + a) - 2*n*B**(n - 1)*ds(a)*cs(a)*ns(a)*cn(x + a)"
     " - Sum(lambda k: B**(k - 1)*(cs(a)*ns(a) + 2*(k - 1)*ds(a)**2*nc(a))"
     "*sn(x)*dn(x)**(2*(n - k) + 1), 1, n)"
     " + ds(a)*Sum(lambda k: B**(k - 1)*(cs(a)**2 + (2*k - 1)*ns(a)**2)"
     "*cn(x)*dn(x)**(2*(n - k)), 1, n)"),
    ("E.e13",
     "dn(x)**(2*n + 1)*sn(x + a)*dn(x + a)",
     "-B**n*cs(a)*cn(x + a)*dn(x + a)"
     " + B**(n - 1)*cs(a)*ns(a)*(cs(a)**2 + 2*n*ds(a)**2)*sn(x)"
     " - Sum(lambda k: B**(k - 1)*(cs(a)*ns(a) + 2*(k - 1)*ds(a)**2*nc(a))"
     "*sn(x)*dn(x)**(2*(n - k + 1)), 1, n)"
     " + (2*n + 1)*B**n*ds(a)*ns(a)*sn(x + a)"
     " + ds(a)*Sum(lambda k: B**(k - 1)*(cs(a)**2 + (2*k - 1)*ns(a)**2)"
     "*cn(x)*dn(x)**(2*(n - k) + 1), 1, n)"),
    ("E.e14",
     "dn(x)**(2*n)*cn(x + a)*dn(x + a)",
     "B**n*cn(x + a)*dn(x + a) + 2*n*B**(n - 1)*ds(a)*cs(a)*ns(a)*sn(x + a)"
     " - Sum(lambda k: B**(k - 1)*(cs(a)*ds(a) + 2*(k - 1)*ds(a)*nc(a)*ns(a))"
     "*cn(x)*dn(x)**(2*(n - k) + 1), 1, n)"
     " - ns(a)*Sum(lambda k: B**(k - 1)*(cs(a)**2 + (2*k - 1)*ds(a)**2)"
     "*sn(x)*dn(x)**(2*(n - k)), 1, n)"),
    ("E.e15",
     "dn(x)**(2*n + 1)*cn(x + a)*dn(x + a)",
     "B**n*cs(a)*sn(x + a)*dn(x + a)"
     " + B**(n - 1)*cs(a)*ds(a)*(cs(a)**2 + 2*n*ns(a)**2)*cn(x)"
     " - Sum(lambda k: B**(k - 1)*(cs(a)*ds(a) + 2*(k - 1)*ds(a)*nc(a)*ns(a))"
     "*cn(x)*dn(x)**(2*(n - k + 1)), 1, n)"
     " + (2*n + 1)*B**n*ds(a)*ns(a)*cn(x + a)"
     " - ns(a)*Sum(lambda k: B**(k - 1)*(cs(a)**2 + (2*k - 1)*ds(a)**2)"
     "*sn(x)*dn(x)**(2*(n - k) + 1), 1, n)"),
    ("E.d15",
     "dn(x)**(2*n)*dn(x + a)**2",
     "2*n*B**(n - 1)*ds(a)*ns(a)*(dn(a) + cs(a)*W) - (1 - m)*B**(n - 1)"
     " + Sum(lambda k: B**(k - 1)*(B**2 - (1 - m) + 2*k*ds(a)**2*ns(a)**2)"
     "*dn(x)**(2*(n - k)), 1, n - 1)"
     " + B**n*dn(x + a)**2 + B*dn(x)**(2*n)"
     " - 2*m*cs(a)*ds(a)*ns(a)*sn(x)*cn(x)"
     "*Sum(lambda k: k*B**(k - 1)*dn(x)**(2*(n - k) - 1), 1, n - 1)"),
    ("E.e17",
     "dn(x)**(2*n + 1)*dn(x + a)**2",
     "B*dn(x)**(2*n + 1) + B**n*m*cs(a)*cn(x + a)*sn(x + a)"
     " + Sum(lambda k: B**(k - 1)*(B**2 - (1 - m) + 2*k*ds(a)**2*ns(a)**2)"
     "*dn(x)**(2*(n - k) + 1), 1, n)"
     " - 2*m*cs(a)*ds(a)*ns(a)*sn(x)*cn(x)"
     "*Sum(lambda k: k*B**(k - 1)*dn(x)**(2*(n - k)), 1, n)"
     " + (2*n + 1)*B**n*ds(a)*ns(a)*dn(x + a)"),
    ("E.3.3",
     "dn(x)**(2*n)*(dn(x + a) + dn(x - a))",
     "A*Sum(lambda k: B**(k - 1)*dn(x)**(2*(n - k) + 1), 1, n)"
     " + B**n*(dn(x + a) + dn(x - a))"),
    ("E.3.6",
     "dn(x)**(2*n + 1)*(dn(x + a) + dn(x - a))",
     "A*Sum(lambda k: B**(k - 1)*dn(x)**(2*(n - k + 1)), 1, n)"
     " + 2*B**n*dn(a) + B**n*cs(a)*(Z(x + a) - Z(x - a) - 2*Z(a))"),
    ("E.3.8",
     "dn(x)**(2*n)*(dn(x + a) - dn(x - a))",
     "D*Sum(lambda k: B**(k - 1)*cn(x)*sn(x)*dn(x)**(2*(n - k)), 1, n)"
     " + B**n*(dn(x + a) - dn(x - a))"),
    ("E.3.9",
     "dn(x)**(2*n + 1)*(dn(x + a) - dn(x - a))",
     "D*Sum(lambda k: B**(k - 1)*cn(x)*sn(x)*dn(x)**(2*(n - k) + 1), 1, n)"
     " + B**n*cs(a)*(Z(x + a) + Z(x - a) - 2*Z(x))"),
    ("E.3.10",
     "dn(x)**(2*n)*dn(x + a)",
     "D/2*Sum(lambda k: B**(k - 1)*cn(x)*sn(x)*dn(x)**(2*(n - k)), 1, n)"
     " + B**n*dn(x + a) + A/2*Sum(lambda k: B**(k - 1)*dn(x)**(2*(n - k) + 1), 1, n)"),
    ("E.3.11",
     "dn(x)*dn(x + a)**(2*n)",
     "A/2*Sum(lambda k: B**(k - 1)*dn(x + a)**(2*(n - k) + 1), 1, n)"
     " - D/2*Sum(lambda k: B**(k - 1)*cn(x + a)*sn(x + a)*dn(x + a)**(2*(n - k)), 1, n)"
     " + B**n*dn(x)"),
]

FAMILY_ALIASES = {"E.e12": "E.d26", "E.e16": "E.d15"}

# Printed forms that fail numerically, kept so tests can demonstrate the fault.
ERRATA = {
    "D.dscdd": {
        "printed_rhs": "cs(a)*ds(a)*ns(a)*(dn(x + a)**2 + 2*dn(x)**2 - dn(a)**2 - 2)"
                       " - m*cs(a)**2*dn(x)*sn(x)*cn(x)"
                       " + (ns(a)**2*(ds(a)**2 + cs(a)**2) + cs(a)**2*ds(a)**2)*(Z(x + a) - Z(x) - Z(a))",
        "note": "sign of the zeta-bracket term is reversed in the printed form",
    },
    "6.9": {
        "printed_rhs": "-dn(x)*sn(x - (x + a))",
        "note": "right side carries a spurious minus sign; at m=0 the left side is sin(a-b)",
    },
    "E.e04": {
        "printed_rhs": "-B1**n*ns(a)*W - (cs(a)*ds(a)*sn(x) + ns(a)*cn(x)*dn(x))"
                       "*Sum(lambda k: m**(n - k)*B1**(k - 1)*sn(x)**(2*(n - k) + 1), 1, n)",
        "note": "summand weight is m**(n-k+1); the printed m**(n-k) drops one factor of m",
    },
    "E.e06": {
        "printed_rhs": "B2**n*(m*cn(a) + ds(a)*W) + (cs(a)*ns(a)*cn(x) - ds(a)*sn(x)*dn(x))"
                       "*Sum(lambda k: m**(n - k)*B2**(k - 1)*cn(x)**(2*(n - k) + 1), 1, n)",
        "note": "summand weight is m**(n-k+1); the printed m**(n-k) drops one factor of m",
    },
}
