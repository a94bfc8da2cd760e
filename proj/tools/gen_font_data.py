#!/usr/bin/env python3
"""Regenerates include/fsts/raster/font_data.hpp from the DejaVu fonts.

The embedded faces are 1-bit glyph masters at a fixed pixel size; the
renderer resamples them with a box filter to get fractional coverage.
Run from the repository root:

    python3 tools/gen_font_data.py
"""

import os

from PIL import Image, ImageDraw, ImageFont

SIZE = 24  # master pixel size
CHARS = [chr(c) for c in range(32, 127)]
FONT_DIR = "/usr/share/fonts/truetype/dejavu"

# family identifier -> fallback face file
FACES = [
    ("times-new-roman", "DejaVuSerif.ttf"),
    ("simsun", "DejaVuSerif-Bold.ttf"),
    ("kaiti", "DejaVuSansMono.ttf"),
    ("microsoft-yahei", "DejaVuSans.ttf"),
    ("simhei", "DejaVuSans-Bold.ttf"),
]


def render_face(path):
    font = ImageFont.truetype(path, SIZE)
    ascent, descent = font.getmetrics()
    glyphs = []
    for ch in CHARS:
        bbox = font.getbbox(ch)
        advance = int(round(font.getlength(ch)))
        x0, y0, x1, y1 = bbox
        w = max(0, x1 - x0)
        h = max(0, y1 - y0)
        if w == 0 or h == 0:
            glyphs.append((advance, 0, 0, 0, 0, b""))
            continue
        img = Image.new("L", (w, h), 0)
        draw = ImageDraw.Draw(img)
        draw.text((-x0, -y0), ch, font=font, fill=255)
        rowbytes = (w + 7) // 8
        data = bytearray()
        px = img.load()
        for y in range(h):
            row = 0
            for x in range(w):
                if px[x, y] >= 128:
                    row |= 1 << (7 - (x % 8))
                if x % 8 == 7:
                    data.append(row)
                    row = 0
            if w % 8 != 0:
                data.append(row)
        glyphs.append((advance, w, h, x0, y0, bytes(data)))
        assert len(data) == rowbytes * h
    return ascent, descent, glyphs


def main():
    out = []
    out.append("#pragma once\n")
    out.append("// Embedded 1-bit glyph masters for the built-in font faces, generated\n")
    out.append("// by tools/gen_font_data.py from the DejaVu fonts (see the DejaVu\n")
    out.append("// license: Bitstream Vera + public-domain additions). Do not edit.\n")
    out.append("\n#include <cstdint>\n\nnamespace fsts::font_data {\n")
    out.append("\nstruct Glyph {\n")
    out.append("    int16_t advance;\n    int16_t width;\n    int16_t height;\n")
    out.append("    int16_t bearing_x;\n    int16_t bearing_y;  // top offset from the em top\n")
    out.append("    uint32_t offset;    // into the face bitmap pool\n};\n")
    out.append("\nstruct Face {\n")
    out.append("    const char* family;\n    int16_t pixel_size;\n    int16_t ascent;\n")
    out.append("    int16_t descent;\n    const Glyph* glyphs;  // chars 32..126\n")
    out.append("    const uint8_t* bitmap;\n};\n")

    face_entries = []
    for family, filename in FACES:
        ascent, descent, glyphs = render_face(os.path.join(FONT_DIR, filename))
        ident = family.replace("-", "_")
        pool = bytearray()
        glyph_lines = []
        for advance, w, h, bx, by, data in glyphs:
            offset = len(pool)
            pool.extend(data)
            glyph_lines.append(
                f"    {{{advance}, {w}, {h}, {bx}, {by}, {offset}u}},")
        out.append(f"\ninline constexpr Glyph k_{ident}_glyphs[] = {{\n")
        out.append("\n".join(glyph_lines))
        out.append("\n};\n")
        out.append(f"\ninline constexpr uint8_t k_{ident}_bitmap[] = {{\n")
        for i in range(0, len(pool), 20):
            chunk = ", ".join(str(b) for b in pool[i:i + 20])
            out.append(f"    {chunk},\n")
        out.append("};\n")
        face_entries.append(
            f"    {{\"{family}\", {SIZE}, {ascent}, {descent}, "
            f"k_{ident}_glyphs, k_{ident}_bitmap}},")

    out.append("\ninline constexpr Face k_builtin_faces[] = {\n")
    out.append("\n".join(face_entries))
    out.append("\n};\n")
    out.append("\n}  // namespace fsts::font_data\n")

    with open("include/fsts/raster/font_data.hpp", "w") as f:
        f.write("".join(out))
    print("wrote include/fsts/raster/font_data.hpp")


if __name__ == "__main__":
    main()
