#!/usr/bin/env python3
"""Writes the degree-26 group of order 31200 as a group catalog file.

The group is PGammaL(2,25) acting on the projective line over F25, generated
by x -> x+1, x -> w*x (w primitive), x -> -1/x and the Frobenius x -> x^5.
Points 0..24 are a + 5b for a + b*t with t^2 = 2; point 25 is infinity.
"""

import argparse
import json

P = 5
INF = 25


def mul(u, v):
    a, b = u
    c, d = v
    return ((a * c + 2 * b * d) % P, (a * d + b * c) % P)


def add(u, v):
    return ((u[0] + v[0]) % P, (u[1] + v[1]) % P)


def power(u, k):
    out = (1, 0)
    for _ in range(k):
        out = mul(out, u)
    return out


def encode(u):
    return u[0] + P * u[1]


def decode(i):
    return (i % P, i // P)


ELEMENTS = [decode(i) for i in range(25)]
ZERO = (0, 0)


def inverse(u):
    for v in ELEMENTS:
        if mul(u, v) == (1, 0):
            return v
    raise ValueError("zero has no inverse")


def primitive():
    for u in ELEMENTS[1:]:
        if len({power(u, k) for k in range(1, 25)}) == 24:
            return u
    raise ValueError("no primitive element")


def images(f):
    return [f(i) for i in range(26)]


def translation(i):
    return INF if i == INF else encode(add(decode(i), (1, 0)))


def scaling(w):
    return lambda i: INF if i == INF else encode(mul(decode(i), w))


def negInverse(i):
    if i == INF:
        return encode(ZERO)
    u = decode(i)
    if u == ZERO:
        return INF
    v = inverse(u)
    return encode(((-v[0]) % P, (-v[1]) % P))


def frobenius(i):
    return INF if i == INF else encode(power(decode(i), P))


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default="data/26t62.json")
    args = parser.parse_args()
    gens = [images(translation), images(scaling(primitive())), images(negInverse), images(frobenius)]
    for g in gens:
        assert sorted(g) == list(range(26))
    doc = {"name": "26T62", "degree": 26, "generators": gens}
    with open(args.out, "w") as fh:
        json.dump(doc, fh)
        fh.write("\n")


if __name__ == "__main__":
    main()
