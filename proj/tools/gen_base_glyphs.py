#!/usr/bin/env python3
"""Draw the synthetic base jamo glyphs (32x32 ASCII PBM) and the variant manifest."""

import argparse
import json
from pathlib import Path

SIZE = 32
W = 3  # stroke width


class Canvas:
    def __init__(self):
        self.px = [[0] * SIZE for _ in range(SIZE)]

    def rect(self, x0, y0, x1, y1):
        for y in range(max(0, y0), min(SIZE, y1 + 1)):
            for x in range(max(0, x0), min(SIZE, x1 + 1)):
                self.px[y][x] = 1

    def hbar(self, x0, x1, y):
        self.rect(x0, y, x1, y + W - 1)

    def vbar(self, x, y0, y1):
        self.rect(x, y0, x + W - 1, y1)

    def line(self, x0, y0, x1, y1):
        n = max(abs(x1 - x0), abs(y1 - y0))
        for i in range(n + 1):
            x = round(x0 + (x1 - x0) * i / n)
            y = round(y0 + (y1 - y0) * i / n)
            self.rect(x, y, x + W - 2, y + W - 2)

    def ring(self, cx, cy, r):
        for y in range(SIZE):
            for x in range(SIZE):
                d2 = (x - cx) ** 2 + (y - cy) ** 2
                if (r - W + 0.5) ** 2 <= d2 <= (r + 0.5) ** 2:
                    self.px[y][x] = 1

    def pbm(self):
        rows = ["P1", f"{SIZE} {SIZE}"]
        rows += [" ".join(str(v) for v in row) for row in self.px]
        return "\n".join(rows) + "\n"


# Consonants are drawn in a box; doubled ones use two half-width boxes.

def giyeok(c, x0, x1, y0, y1):
    c.hbar(x0, x1, y0)
    c.vbar(x1 - W + 1, y0, y1)


def nieun(c, x0, x1, y0, y1):
    c.vbar(x0, y0, y1)
    c.hbar(x0, x1, y1 - W + 1)


def digeut(c, x0, x1, y0, y1):
    c.hbar(x0, x1, y0)
    nieun(c, x0, x1, y0, y1)


def rieul(c, x0, x1, y0, y1):
    m = (y0 + y1) // 2 - 1
    c.hbar(x0, x1, y0)
    c.vbar(x1 - W + 1, y0, m)
    c.hbar(x0, x1, m)
    c.vbar(x0, m, y1)
    c.hbar(x0, x1, y1 - W + 1)


def mieum(c, x0, x1, y0, y1):
    c.hbar(x0, x1, y0)
    c.vbar(x0, y0, y1)
    c.vbar(x1 - W + 1, y0, y1)
    c.hbar(x0, x1, y1 - W + 1)


def bieup(c, x0, x1, y0, y1):
    c.vbar(x0, y0, y1)
    c.vbar(x1 - W + 1, y0, y1)
    c.hbar(x0, x1, (y0 + y1) // 2)
    c.hbar(x0, x1, y1 - W + 1)


def siot(c, x0, x1, y0, y1):
    mid = (x0 + x1) // 2
    ym = (y0 + y1) // 2
    c.line(mid, y0, x0, y1 - 1)
    c.line(mid - (mid - x0) * (ym - y0) // (y1 - 1 - y0), ym, x1 - 1, y1 - 1)


def ieung(c, x0, x1, y0, y1):
    r = min(x1 - x0, y1 - y0) // 2
    c.ring((x0 + x1) // 2, (y0 + y1) // 2, r)


def jieut(c, x0, x1, y0, y1):
    c.hbar(x0, x1, y0)
    siot(c, x0, x1, y0 + W + 1, y1)


def chieut(c, x0, x1, y0, y1):
    mid = (x0 + x1) // 2
    c.vbar(mid - 1, y0, y0 + 3)
    jieut(c, x0, x1, y0 + 5, y1)


def kieuk(c, x0, x1, y0, y1):
    giyeok(c, x0, x1, y0, y1)
    c.hbar(x0, x1 - W, (y0 + y1) // 2)


def tieut(c, x0, x1, y0, y1):
    digeut(c, x0, x1, y0, y1)
    c.hbar(x0, x1, (y0 + y1) // 2)


def pieup(c, x0, x1, y0, y1):
    c.hbar(x0, x1, y0)
    c.vbar(x0 + 4, y0, y1)
    c.vbar(x1 - W - 3, y0, y1)
    c.hbar(x0, x1, y1 - W + 1)


def hieut(c, x0, x1, y0, y1):
    mid = (x0 + x1) // 2
    c.vbar(mid - 1, y0, y0 + 3)
    c.hbar(x0 + 2, x1 - 2, y0 + 5)
    ieung(c, x0 + 3, x1 - 3, y0 + 10, y1)


FULL = (5, 26, 5, 26)
LEFT = (3, 14, 5, 26)
RIGHT = (17, 28, 5, 26)

CONSONANTS = {
    "G": [(giyeok, FULL)],
    "GG": [(giyeok, LEFT), (giyeok, RIGHT)],
    "N": [(nieun, FULL)],
    "D": [(digeut, FULL)],
    "DD": [(digeut, LEFT), (digeut, RIGHT)],
    "R": [(rieul, FULL)],
    "M": [(mieum, FULL)],
    "B": [(bieup, FULL)],
    "BB": [(bieup, LEFT), (bieup, RIGHT)],
    "S": [(siot, FULL)],
    "SS": [(siot, LEFT), (siot, RIGHT)],
    "NG": [(ieung, FULL)],
    "J": [(jieut, FULL)],
    "JJ": [(jieut, LEFT), (jieut, RIGHT)],
    "CH": [(chieut, FULL)],
    "K": [(kieuk, FULL)],
    "T": [(tieut, FULL)],
    "P": [(pieup, FULL)],
    "H": [(hieut, FULL)],
}


# Vowel parts: vertical stems with side ticks, horizontal bars with up/down ticks.

def stem(c, x, left=0, right=0, ticks=1):
    c.vbar(x, 3, 28)
    ys = [14] if ticks == 1 else [10, 18]
    for y in ys:
        if right:
            c.hbar(x + W, x + W + right, y)
        if left:
            c.hbar(x - left, x - 1, y)


def bar(c, up=0, down=0, ticks=1, x0=3, x1=28, y=15):
    c.hbar(x0, x1, y)
    mid = (x0 + x1) // 2
    xs = [mid - 1] if ticks == 1 else [mid - 5, mid + 3]
    for x in xs:
        if up:
            c.vbar(x, y - up, y - 1)
        if down:
            c.vbar(x, y + W, y + W + down - 1)


def v_a(c): stem(c, 13, right=7)
def v_ae(c): stem(c, 9, right=5); c.vbar(21, 3, 28)
def v_ya(c): stem(c, 13, right=7, ticks=2)
def v_yae(c): stem(c, 9, right=5, ticks=2); c.vbar(21, 3, 28)
def v_eo(c): stem(c, 18, left=7)
def v_e(c): stem(c, 12, left=6); c.vbar(22, 3, 28)
def v_yeo(c): stem(c, 18, left=7, ticks=2)
def v_ye(c): stem(c, 12, left=6, ticks=2); c.vbar(22, 3, 28)
def v_o(c): bar(c, up=7, y=20)
def v_yo(c): bar(c, up=7, ticks=2, y=20)
def v_u(c): bar(c, down=7, y=11)
def v_yu(c): bar(c, down=7, ticks=2, y=11)
def v_eu(c): bar(c, y=15)
def v_i(c): c.vbar(14, 3, 28)
def v_sil(c): c.hbar(10, 21, 15)


def v_wa(c): bar(c, up=5, x0=2, x1=17, y=22); stem(c, 22, left=4)
def v_wae(c): bar(c, up=5, x0=2, x1=15, y=22); stem(c, 18, right=3); c.vbar(27, 3, 28)
def v_oe(c): bar(c, up=5, x0=2, x1=18, y=22); c.vbar(24, 3, 28)
def v_wo(c): bar(c, down=5, x0=2, x1=17, y=9); stem(c, 24, left=4)
def v_we(c): bar(c, down=5, x0=2, x1=14, y=9); stem(c, 19, left=3); c.vbar(27, 3, 28)
def v_wi(c): bar(c, down=5, x0=2, x1=18, y=9); c.vbar(24, 3, 28)
def v_ui(c): bar(c, x0=2, x1=18, y=15); c.vbar(24, 3, 28)


VOWELS = {
    "A": v_a, "AE": v_ae, "YA": v_ya, "YAE": v_yae, "EO": v_eo, "E": v_e,
    "YEO": v_yeo, "YE": v_ye, "O": v_o, "WA": v_wa, "WAE": v_wae, "OE": v_oe,
    "YO": v_yo, "U": v_u, "WO": v_wo, "WE": v_we, "WI": v_wi, "YU": v_yu,
    "EU": v_eu, "UI": v_ui, "I": v_i, "SIL": v_sil,
}

MODIFIABLE = ["D", "R", "B", "S", "NG", "K", "P", "H", "J", "CH"]
RHOTIC = ["A", "EO", "O", "E", "I", "U", "WA", "WO", "WE", "YA", "YO", "YEO"]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="data/glyphs", help="glyph directory")
    ap.add_argument("--manifest", default="data/atlas_manifest.json")
    args = ap.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, parts in CONSONANTS.items():
        c = Canvas()
        for fn, box in parts:
            fn(c, *box)
        (out / f"{name}.pbm").write_text(c.pbm())
    for name, fn in VOWELS.items():
        c = Canvas()
        fn(c)
        (out / f"{name}.pbm").write_text(c.pbm())

    variants = [{"token": f"{t}*", "op": "thicken", "radius": 1} for t in MODIFIABLE]
    variants += [{"token": f"{t}^", "op": "taper", "start": 1, "end": 3} for t in RHOTIC]
    Path(args.manifest).write_text(json.dumps({"variants": variants}, indent=2) + "\n")


if __name__ == "__main__":
    main()
