#!/usr/bin/env python3
# Copyright 2026 The k8s-atlas Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates share/icons/*.png from the kind table in resource.hpp.

Each icon is a Kubernetes-blue heptagon carrying the kind's short alias,
in the style of the community icon set. Run from the repository root.
"""
import math
import pathlib
import re

from PIL import Image, ImageDraw, ImageFont

ROOT = pathlib.Path(__file__).resolve().parent.parent
TABLE = re.compile(r'\{"(\w+)", "[^"]+", Scope::\w+, "([^"]+)"')
SIZE = 56
BLUE = (50, 108, 229, 255)
GREY = (120, 120, 120, 255)


def heptagon(cx, cy, r):
    return [(cx + r * math.sin(2 * math.pi * i / 7), cy - r * math.cos(2 * math.pi * i / 7))
            for i in range(7)]


def icon(text, fill):
    img = Image.new("RGBA", (SIZE, SIZE), (0, 0, 0, 0))
    draw = ImageDraw.Draw(img)
    draw.polygon(heptagon(SIZE / 2, SIZE / 2 + 1, SIZE / 2 - 2), fill=fill, outline="white", width=2)
    size = 13 if len(text) <= 6 else 9 if len(text) <= 10 else 7
    font = ImageFont.load_default(size=size)
    box = draw.textbbox((0, 0), text, font=font)
    w, h = box[2] - box[0], box[3] - box[1]
    draw.text(((SIZE - w) / 2 - box[0], (SIZE - h) / 2 - box[1] + 2), text, fill="white", font=font)
    return img


def main():
    out = ROOT / "share" / "icons"
    out.mkdir(parents=True, exist_ok=True)
    source = (ROOT / "include" / "k8s_atlas" / "resource.hpp").read_text()
    for kind, alias in TABLE.findall(source):
        icon(alias, BLUE).save(out / f"{kind.lower()}.png", optimize=True)
    icon("?", GREY).save(out / "unknown.png", optimize=True)


if __name__ == "__main__":
    main()
