"""Render sympy Laurent polynomials in q in the library's canonical text form."""
import sympy as sp

from sl2_oracle import q


def laurent_str(expr):
    expr = sp.expand(expr)
    if expr == 0:
        return "0"
    d = {}
    for t in sp.Add.make_args(expr):
        c, e = t.as_coeff_exponent(q)
        d[sp.Rational(e)] = d.get(sp.Rational(e), 0) + c
    out = ""
    for e in sorted(d):
        c = sp.Rational(d[e])
        if c == 0:
            continue
        if e == 0:
            mono = ""
        elif e.q == 1:
            mono = "q" if e == 1 else "q^%d" % e
        else:
            mono = "q^(%s)" % e
        neg = c < 0
        a = -c if neg else c
        if mono == "":
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = "%s*%s" % (a, mono)
        if not out:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


def rational_str(r):
    n, d = sp.fraction(sp.cancel(sp.together(r)))
    return laurent_str(n), laurent_str(d)
