#pragma once
// Embedded 1-bit glyph masters for the built-in font faces, generated
// by tools/gen_font_data.py from the DejaVu fonts (see the DejaVu
// license: Bitstream Vera + public-domain additions). Do not edit.

#include <cstdint>

namespace fsts::font_data {

struct Glyph {
    int16_t advance;
    int16_t width;
    int16_t height;
    int16_t bearing_x;
    int16_t bearing_y;  // top offset from the em top
    uint32_t offset;    // into the face bitmap pool
};

struct Face {
    const char* family;
    int16_t pixel_size;
    int16_t ascent;
    int16_t descent;
    const Glyph* glyphs;  // chars 32..126
    const uint8_t* bitmap;
};

inline constexpr Glyph k_times_new_roman_glyphs[] = {
    {8, 0, 0, 0, 0, 0u},
    {10, 10, 18, 0, 5, 0u},
    {11, 11, 18, 0, 5, 36u},
    {20, 20, 17, 0, 6, 72u},
    {15, 15, 22, 0, 5, 123u},
    {23, 23, 18, 0, 5, 167u},
    {21, 21, 18, 0, 5, 221u},
    {7, 7, 18, 0, 5, 275u},
    {9, 9, 22, 0, 5, 293u},
    {9, 9, 22, 0, 5, 337u},
    {12, 12, 18, 0, 5, 381u},
    {20, 20, 14, 0, 9, 417u},
    {8, 8, 6, 0, 20, 459u},
    {8, 8, 7, 0, 16, 465u},
    {8, 8, 3, 0, 20, 472u},
    {8, 9, 20, 0, 5, 475u},
    {15, 15, 18, 0, 5, 515u},
    {15, 15, 18, 0, 5, 551u},
    {15, 15, 18, 0, 5, 587u},
    {15, 15, 18, 0, 5, 623u},
    {15, 15, 18, 0, 5, 659u},
    {15, 15, 18, 0, 5, 695u},
    {15, 15, 18, 0, 5, 731u},
    {15, 15, 18, 0, 5, 767u},
    {15, 15, 18, 0, 5, 803u},
    {15, 15, 18, 0, 5, 839u},
    {8, 8, 10, 0, 13, 875u},
    {8, 8, 13, 0, 13, 885u},
    {20, 20, 14, 0, 9, 898u},
    {20, 20, 11, 0, 12, 940u},
    {20, 20, 14, 0, 9, 973u},
    {13, 13, 18, 0, 5, 1015u},
    {24, 24, 21, 0, 6, 1051u},
    {17, 19, 18, -1, 5, 1114u},
    {18, 18, 18, 0, 5, 1168u},
    {18, 18, 18, 0, 5, 1222u},
    {19, 19, 18, 0, 5, 1276u},
    {18, 18, 18, 0, 5, 1330u},
    {17, 17, 18, 0, 5, 1384u},
    {19, 19, 18, 0, 5, 1438u},
    {21, 21, 18, 0, 5, 1492u},
    {9, 9, 18, 0, 5, 1546u},
    {10, 13, 23, -3, 5, 1582u},
    {18, 19, 18, 0, 5, 1628u},
    {16, 16, 18, 0, 5, 1682u},
    {25, 25, 18, 0, 5, 1718u},
    {21, 21, 18, 0, 5, 1790u},
    {20, 20, 18, 0, 5, 1844u},
    {16, 16, 18, 0, 5, 1898u},
    {20, 20, 22, 0, 5, 1934u},
    {18, 19, 18, 0, 5, 2000u},
    {16, 16, 18, 0, 5, 2054u},
    {16, 16, 18, 0, 5, 2090u},
    {20, 20, 18, 0, 5, 2126u},
    {17, 19, 18, -1, 5, 2180u},
    {25, 25, 18, 0, 5, 2234u},
    {17, 17, 18, 0, 5, 2306u},
    {16, 18, 18, -1, 5, 2360u},
    {17, 17, 18, 0, 5, 2414u},
    {9, 9, 21, 0, 5, 2468u},
    {8, 9, 20, 0, 5, 2510u},
    {9, 9, 21, 0, 5, 2550u},
    {20, 20, 18, 0, 5, 2592u},
    {12, 12, 6, 0, 23, 2646u},
    {12, 12, 19, 0, 4, 2658u},
    {14, 14, 12, 0, 11, 2696u},
    {15, 15, 18, 0, 5, 2720u},
    {13, 13, 12, 0, 11, 2756u},
    {15, 15, 18, 0, 5, 2780u},
    {14, 14, 12, 0, 11, 2816u},
    {9, 11, 18, 0, 5, 2840u},
    {15, 15, 17, 0, 11, 2876u},
    {15, 15, 18, 0, 5, 2910u},
    {8, 8, 18, 0, 5, 2946u},
    {7, 10, 23, -3, 5, 2964u},
    {15, 15, 18, 0, 5, 3010u},
    {8, 8, 18, 0, 5, 3046u},
    {23, 23, 12, 0, 11, 3064u},
    {15, 15, 12, 0, 11, 3100u},
    {14, 14, 12, 0, 11, 3124u},
    {15, 15, 17, 0, 11, 3148u},
    {15, 15, 17, 0, 11, 3182u},
    {11, 12, 12, 0, 11, 3216u},
    {12, 12, 12, 0, 11, 3240u},
    {10, 10, 16, 0, 7, 3264u},
    {15, 15, 12, 0, 11, 3296u},
    {14, 15, 12, -1, 11, 3320u},
    {21, 21, 12, 0, 11, 3344u},
    {14, 14, 12, 0, 11, 3380u},
    {14, 15, 17, -1, 11, 3404u},
    {13, 13, 12, 0, 11, 3438u},
    {15, 15, 22, 0, 5, 3462u},
    {8, 8, 24, 0, 5, 3506u},
    {15, 15, 22, 0, 5, 3530u},
    {20, 20, 10, 0, 13, 3574u},
};

inline constexpr uint8_t k_times_new_roman_bitmap[] = {
    28, 0, 28, 0, 12, 0, 12, 0, 12, 0, 12, 0, 12, 0, 12, 0, 12, 0, 12, 0,
    12, 0, 12, 0, 12, 0, 0, 0, 0, 0, 12, 0, 28, 0, 12, 0, 49, 128, 49, 128,
    49, 128, 49, 128, 49, 128, 49, 128, 49, 128, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 195, 0, 0, 195, 0, 0, 198,
    0, 0, 198, 0, 1, 134, 0, 31, 255, 192, 31, 255, 192, 1, 140, 0, 3, 12, 0, 3,
    24, 0, 63, 255, 128, 63, 255, 128, 6, 24, 0, 6, 48, 0, 6, 48, 0, 6, 48, 0,
    12, 48, 0, 1, 0, 1, 0, 1, 0, 7, 224, 25, 56, 57, 24, 49, 24, 57, 0, 61,
    0, 31, 128, 15, 224, 1, 240, 1, 120, 1, 56, 33, 24, 49, 24, 57, 48, 15, 192, 1,
    0, 1, 0, 1, 0, 0, 0, 30, 0, 128, 51, 1, 128, 49, 131, 0, 97, 131, 0, 97,
    134, 0, 97, 132, 0, 97, 140, 0, 49, 152, 0, 51, 24, 224, 30, 51, 16, 0, 35, 24,
    0, 98, 24, 0, 198, 8, 0, 198, 8, 1, 130, 24, 1, 3, 24, 3, 3, 16, 6, 0,
    224, 1, 240, 0, 7, 24, 0, 6, 8, 0, 12, 8, 0, 14, 0, 0, 14, 0, 0, 7,
    0, 0, 7, 128, 0, 13, 195, 240, 25, 224, 192, 48, 240, 192, 48, 112, 128, 48, 57, 128,
    48, 31, 0, 56, 15, 0, 24, 7, 0, 14, 31, 128, 7, 241, 240, 48, 48, 48, 48, 48,
    48, 48, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 6, 0, 12, 0, 12,
    0, 24, 0, 24, 0, 56, 0, 48, 0, 48, 0, 48, 0, 48, 0, 48, 0, 48, 0, 48,
    0, 48, 0, 56, 0, 24, 0, 24, 0, 12, 0, 12, 0, 6, 0, 1, 0, 32, 0, 48,
    0, 24, 0, 12, 0, 12, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6,
    0, 6, 0, 6, 0, 6, 0, 6, 0, 6, 0, 12, 0, 12, 0, 24, 0, 48, 0, 32,
    0, 6, 0, 6, 0, 70, 32, 118, 224, 31, 128, 15, 0, 31, 128, 118, 224, 70, 32, 6,
    0, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 96, 0,
    0, 96, 0, 0, 96, 0, 0, 96, 0, 0, 96, 0, 0, 96, 0, 31, 255, 192, 31, 255,
    192, 0, 96, 0, 0, 96, 0, 0, 96, 0, 0, 96, 0, 0, 96, 0, 0, 96, 0, 24,
    24, 24, 48, 112, 64, 126, 126, 0, 0, 0, 0, 0, 24, 56, 24, 3, 0, 3, 0, 6,
    0, 6, 0, 6, 0, 4, 0, 12, 0, 12, 0, 8, 0, 24, 0, 24, 0, 24, 0, 48,
    0, 48, 0, 48, 0, 96, 0, 96, 0, 96, 0, 192, 0, 192, 0, 7, 192, 12, 96, 24,
    48, 24, 56, 48, 24, 48, 24, 48, 24, 48, 28, 48, 28, 48, 28, 48, 28, 48, 24, 48,
    24, 48, 24, 24, 56, 24, 48, 12, 96, 7, 192, 3, 128, 7, 128, 15, 128, 27, 128, 3,
    128, 3, 128, 3, 128, 3, 128, 3, 128, 3, 128, 3, 128, 3, 128, 3, 128, 3, 128, 3,
    128, 3, 128, 3, 128, 31, 240, 31, 192, 56, 96, 48, 48, 32, 48, 0, 56, 0, 56, 0,
    48, 0, 48, 0, 96, 0, 224, 0, 192, 1, 128, 3, 0, 6, 0, 12, 8, 24, 8, 63,
    248, 63, 248, 15, 192, 56, 112, 48, 48, 48, 56, 0, 56, 0, 56, 0, 48, 0, 96, 3,
    192, 0, 112, 0, 56, 0, 24, 0, 24, 0, 24, 32, 24, 48, 56, 56, 112, 15, 192, 0,
    224, 1, 224, 1, 224, 3, 224, 2, 224, 6, 224, 12, 224, 12, 224, 24, 224, 16, 224, 48,
    224, 96, 224, 96, 224, 127, 252, 0, 224, 0, 224, 0, 224, 3, 252, 31, 240, 31, 240, 16,
    0, 16, 0, 16, 0, 16, 0, 23, 192, 24, 112, 16, 48, 0, 24, 0, 24, 0, 24, 0,
    24, 0, 24, 32, 24, 48, 48, 56, 112, 15, 192, 3, 224, 12, 56, 8, 24, 24, 24, 48,
    0, 48, 0, 51, 224, 60, 48, 56, 56, 56, 24, 56, 28, 48, 28, 48, 28, 56, 28, 56,
    24, 24, 56, 12, 48, 7, 192, 63, 252, 63, 248, 32, 24, 32, 24, 0, 48, 0, 48, 0,
    32, 0, 96, 0, 96, 0, 192, 0, 192, 0, 128, 1, 128, 1, 128, 3, 0, 3, 0, 2,
    0, 6, 0, 7, 192, 28, 112, 24, 56, 56, 24, 56, 24, 56, 24, 24, 56, 12, 112, 7,
    192, 28, 48, 56, 24, 48, 24, 48, 28, 48, 28, 48, 24, 56, 24, 28, 48, 7, 224, 7,
    192, 28, 96, 56, 48, 48, 56, 48, 24, 48, 24, 48, 28, 48, 28, 48, 28, 56, 60, 28,
    124, 7, 216, 0, 24, 0, 24, 48, 16, 48, 48, 56, 96, 15, 128, 24, 28, 24, 0, 0,
    0, 0, 24, 28, 24, 24, 28, 24, 0, 0, 0, 0, 24, 24, 24, 48, 112, 64, 0, 0,
    192, 0, 7, 192, 0, 31, 0, 0, 252, 0, 7, 224, 0, 31, 0, 0, 28, 0, 0, 31,
    0, 0, 7, 224, 0, 0, 252, 0, 0, 31, 0, 0, 7, 192, 0, 0, 192, 0, 0, 0,
    31, 255, 192, 31, 255, 192, 0, 0, 0, 0, 0, 0, 0, 0, 0, 31, 255, 192, 31, 255,
    192, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 16, 0, 0, 30, 0, 0, 15,
    128, 0, 1, 240, 0, 0, 126, 0, 0, 15, 128, 0, 3, 192, 0, 15, 128, 0, 126, 0,
    1, 240, 0, 15, 128, 0, 30, 0, 0, 16, 0, 0, 0, 0, 0, 31, 128, 48, 192, 32,
    96, 32, 112, 0, 112, 0, 112, 0, 96, 0, 224, 1, 192, 7, 0, 6, 0, 6, 0, 6,
    0, 0, 0, 0, 0, 6, 0, 14, 0, 6, 0, 0, 127, 0, 1, 192, 192, 7, 0, 32,
    12, 0, 16, 24, 0, 8, 24, 61, 136, 48, 227, 132, 48, 193, 132, 49, 129, 132, 49, 129,
    132, 49, 129, 132, 49, 129, 132, 49, 129, 140, 48, 193, 136, 48, 227, 176, 24, 61, 192, 24,
    0, 0, 12, 0, 0, 7, 0, 64, 1, 192, 192, 0, 127, 0, 0, 224, 0, 0, 224, 0,
    0, 240, 0, 1, 240, 0, 1, 48, 0, 1, 56, 0, 3, 56, 0, 2, 24, 0, 2, 28,
    0, 6, 28, 0, 4, 12, 0, 12, 14, 0, 15, 254, 0, 8, 7, 0, 24, 7, 0, 16,
    3, 0, 16, 3, 128, 124, 15, 224, 127, 248, 0, 12, 28, 0, 12, 14, 0, 12, 14, 0,
    12, 6, 0, 12, 14, 0, 12, 14, 0, 12, 28, 0, 15, 248, 0, 12, 14, 0, 12, 6,
    0, 12, 7, 0, 12, 7, 0, 12, 7, 0, 12, 7, 0, 12, 7, 0, 12, 14, 0, 127,
    248, 0, 1, 252, 0, 6, 15, 0, 12, 3, 0, 24, 1, 0, 56, 1, 0, 48, 0, 0,
    48, 0, 0, 112, 0, 0, 112, 0, 0, 112, 0, 0, 112, 0, 0, 48, 0, 0, 48, 0,
    0, 56, 1, 128, 24, 3, 0, 12, 7, 0, 6, 14, 0, 1, 248, 0, 127, 240, 0, 12,
    28, 0, 12, 6, 0, 12, 3, 0, 12, 3, 128, 12, 1, 128, 12, 1, 192, 12, 1, 192,
    12, 1, 192, 12, 1, 192, 12, 1, 192, 12, 1, 192, 12, 1, 128, 12, 3, 128, 12, 3,
    0, 12, 6, 0, 12, 28, 0, 127, 240, 0, 127, 254, 0, 12, 2, 0, 12, 2, 0, 12,
    0, 0, 12, 0, 0, 12, 0, 0, 12, 8, 0, 12, 8, 0, 15, 248, 0, 12, 8, 0,
    12, 8, 0, 12, 0, 0, 12, 0, 0, 12, 0, 0, 12, 0, 0, 12, 3, 0, 12, 3,
    0, 127, 255, 0, 127, 255, 0, 12, 3, 0, 12, 3, 0, 12, 0, 0, 12, 0, 0, 12,
    0, 0, 12, 8, 0, 12, 8, 0, 15, 248, 0, 12, 8, 0, 12, 8, 0, 12, 0, 0,
    12, 0, 0, 12, 0, 0, 12, 0, 0, 12, 0, 0, 12, 0, 0, 127, 128, 0, 1, 252,
    0, 6, 7, 128, 12, 3, 128, 24, 1, 128, 56, 1, 128, 48, 0, 0, 48, 0, 0, 112,
    0, 0, 112, 0, 0, 112, 0, 0, 112, 15, 128, 48, 1, 128, 48, 1, 128, 56, 1, 128,
    24, 1, 128, 12, 1, 128, 7, 7, 128, 1, 252, 0, 127, 7, 240, 12, 1, 128, 12, 1,
    128, 12, 1, 128, 12, 1, 128, 12, 1, 128, 12, 1, 128, 12, 1, 128, 15, 255, 128, 12,
    1, 128, 12, 1, 128, 12, 1, 128, 12, 1, 128, 12, 1, 128, 12, 1, 128, 12, 1, 128,
    12, 1, 128, 127, 7, 240, 127, 0, 12, 0, 12, 0, 12, 0, 12, 0, 12, 0, 12, 0,
    12, 0, 12, 0, 12, 0, 12, 0, 12, 0, 12, 0, 12, 0, 12, 0, 12, 0, 12, 0,
    127, 0, 15, 240, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128,
    1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128,
    65, 128, 97, 128, 99, 0, 62, 0, 127, 15, 128, 12, 6, 0, 12, 12, 0, 12, 24, 0,
    12, 48, 0, 12, 96, 0, 12, 192, 0, 13, 0, 0, 15, 0, 0, 15, 128, 0, 13, 192,
    0, 12, 224, 0, 12, 112, 0, 12, 56, 0, 12, 28, 0, 12, 14, 0, 12, 7, 0, 127,
    3, 192, 127, 0, 12, 0, 12, 0, 12, 0, 12, 0, 12, 0, 12, 0, 12, 0, 12, 0,
    12, 0, 12, 0, 12, 0, 12, 0, 12, 0, 12, 2, 12, 2, 12, 2, 127, 254, 126, 0,
    62, 0, 14, 0, 56, 0, 14, 0, 120, 0, 15, 0, 120, 0, 11, 0, 216, 0, 11, 128,
    152, 0, 9, 129, 152, 0, 9, 193, 24, 0, 8, 193, 24, 0, 8, 226, 24, 0, 8, 98,
    24, 0, 8, 118, 24, 0, 8, 60, 24, 0, 8, 60, 24, 0, 8, 56, 24, 0, 8, 16,
    24, 0, 8, 0, 24, 0, 126, 0, 254, 0, 124, 3, 240, 14, 0, 192, 14, 0, 192, 15,
    0, 192, 11, 128, 192, 9, 192, 192, 8, 192, 192, 8, 224, 192, 8, 112, 192, 8, 56, 192,
    8, 24, 192, 8, 28, 192, 8, 14, 192, 8, 7, 192, 8, 3, 192, 8, 3, 192, 8, 1,
    192, 126, 0, 192, 1, 248, 0, 6, 14, 0, 12, 3, 0, 24, 3, 128, 56, 1, 128, 48,
    1, 192, 48, 1, 192, 112, 0, 192, 112, 0, 192, 112, 0, 192, 112, 0, 192, 48, 1, 192,
    48, 1, 192, 56, 1, 128, 24, 3, 128, 12, 3, 0, 6, 14, 0, 1, 248, 0, 127, 240,
    12, 28, 12, 14, 12, 14, 12, 6, 12, 6, 12, 14, 12, 14, 12, 28, 15, 240, 12, 0,
    12, 0, 12, 0, 12, 0, 12, 0, 12, 0, 12, 0, 127, 128, 1, 248, 0, 6, 14, 0,
    12, 3, 0, 24, 3, 128, 56, 1, 128, 48, 1, 192, 48, 1, 192, 112, 0, 192, 112, 0,
    192, 112, 0, 192, 112, 0, 192, 48, 1, 192, 48, 1, 192, 56, 1, 128, 24, 3, 128, 12,
    3, 0, 6, 14, 0, 1, 248, 0, 0, 48, 0, 0, 24, 0, 0, 15, 0, 0, 3, 0,
    127, 248, 0, 12, 28, 0, 12, 14, 0, 12, 6, 0, 12, 7, 0, 12, 6, 0, 12, 14,
    0, 12, 28, 0, 15, 240, 0, 12, 56, 0, 12, 28, 0, 12, 12, 0, 12, 14, 0, 12,
    14, 0, 12, 6, 0, 12, 7, 0, 12, 3, 0, 127, 3, 224, 7, 240, 28, 28, 24, 12,
    48, 12, 48, 12, 56, 0, 56, 0, 30, 0, 15, 224, 3, 248, 0, 124, 0, 28, 0, 14,
    48, 14, 48, 12, 48, 12, 60, 24, 15, 240, 255, 255, 193, 131, 193, 131, 193, 131, 1, 128,
    1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128,
    1, 128, 1, 128, 7, 224, 127, 7, 224, 28, 1, 128, 28, 1, 128, 28, 1, 128, 28, 1,
    128, 28, 1, 128, 28, 1, 128, 28, 1, 128, 28, 1, 128, 28, 1, 128, 28, 1, 128, 28,
    1, 128, 28, 1, 128, 12, 1, 128, 12, 1, 0, 14, 3, 0, 7, 6, 0, 1, 252, 0,
    126, 3, 224, 24, 1, 128, 28, 1, 0, 28, 1, 0, 12, 3, 0, 14, 2, 0, 6, 6,
    0, 7, 6, 0, 7, 4, 0, 3, 12, 0, 3, 136, 0, 3, 136, 0, 1, 152, 0, 1,
    208, 0, 1, 240, 0, 0, 240, 0, 0, 224, 0, 0, 96, 0, 254, 12, 15, 128, 48, 12,
    6, 0, 56, 30, 4, 0, 24, 30, 4, 0, 24, 22, 4, 0, 28, 54, 12, 0, 28, 39,
    8, 0, 12, 35, 8, 0, 12, 35, 8, 0, 14, 99, 24, 0, 14, 67, 144, 0, 6, 65,
    144, 0, 6, 65, 176, 0, 7, 193, 240, 0, 7, 129, 224, 0, 3, 128, 224, 0, 3, 128,
    224, 0, 3, 0, 192, 0, 254, 63, 0, 56, 12, 0, 28, 8, 0, 14, 24, 0, 14, 48,
    0, 7, 32, 0, 3, 224, 0, 3, 192, 0, 1, 192, 0, 1, 192, 0, 3, 224, 0, 2,
    112, 0, 6, 112, 0, 12, 56, 0, 8, 28, 0, 24, 28, 0, 48, 14, 0, 252, 63, 128,
    126, 15, 128, 24, 2, 0, 28, 6, 0, 14, 12, 0, 14, 8, 0, 7, 24, 0, 3, 16,
    0, 3, 176, 0, 1, 224, 0, 1, 192, 0, 0, 192, 0, 0, 192, 0, 0, 192, 0, 0,
    192, 0, 0, 192, 0, 0, 192, 0, 0, 192, 0, 3, 240, 0, 127, 254, 0, 96, 14, 0,
    96, 28, 0, 96, 60, 0, 0, 56, 0, 0, 112, 0, 0, 240, 0, 0, 224, 0, 1, 192,
    0, 3, 128, 0, 3, 128, 0, 7, 0, 0, 14, 0, 0, 14, 0, 0, 28, 0, 0, 56,
    3, 0, 120, 3, 0, 127, 255, 0, 63, 0, 48, 0, 48, 0, 48, 0, 48, 0, 48, 0,
    48, 0, 48, 0, 48, 0, 48, 0, 48, 0, 48, 0, 48, 0, 48, 0, 48, 0, 48, 0,
    48, 0, 48, 0, 48, 0, 48, 0, 63, 0, 192, 0, 192, 0, 96, 0, 96, 0, 96, 0,
    48, 0, 48, 0, 48, 0, 24, 0, 24, 0, 24, 0, 8, 0, 12, 0, 12, 0, 4, 0,
    6, 0, 6, 0, 6, 0, 3, 0, 3, 0, 62, 0, 6, 0, 6, 0, 6, 0, 6, 0,
    6, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6, 0,
    6, 0, 6, 0, 6, 0, 6, 0, 6, 0, 62, 0, 0, 240, 0, 0, 248, 0, 1, 248,
    0, 3, 140, 0, 6, 6, 0, 12, 3, 0, 24, 1, 128, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 255, 240, 56, 0,
    24, 0, 12, 0, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 15, 128, 56, 224,
    48, 96, 32, 112, 0, 48, 31, 240, 56, 48, 112, 48, 112, 48, 112, 112, 56, 240, 31, 124,
    120, 0, 24, 0, 24, 0, 24, 0, 24, 0, 24, 0, 25, 224, 30, 56, 28, 24, 24, 28,
    24, 12, 24, 12, 24, 12, 24, 12, 24, 28, 28, 24, 28, 56, 123, 224, 7, 192, 24, 112,
    48, 48, 48, 16, 112, 0, 112, 0, 112, 0, 112, 0, 48, 0, 48, 48, 24, 96, 7, 192,
    0, 248, 0, 56, 0, 56, 0, 56, 0, 56, 0, 56, 15, 184, 24, 120, 48, 56, 48, 56,
    112, 56, 112, 56, 112, 56, 112, 56, 48, 56, 48, 56, 24, 120, 15, 190, 7, 192, 24, 96,
    48, 48, 48, 56, 112, 56, 127, 248, 112, 0, 112, 0, 48, 0, 48, 24, 28, 48, 7, 192,
    7, 128, 12, 64, 24, 64, 24, 0, 24, 0, 24, 0, 127, 128, 24, 0, 24, 0, 24, 0,
    24, 0, 24, 0, 24, 0, 24, 0, 24, 0, 24, 0, 24, 0, 127, 0, 15, 190, 24, 120,
    48, 56, 48, 56, 112, 56, 112, 56, 112, 56, 112, 56, 48, 56, 48, 56, 24, 120, 15, 184,
    0, 56, 48, 48, 48, 48, 56, 96, 15, 192, 120, 0, 24, 0, 24, 0, 24, 0, 24, 0,
    24, 0, 25, 224, 30, 48, 28, 56, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24,
    24, 24, 24, 24, 126, 126, 24, 56, 24, 0, 0, 0, 120, 24, 24, 24, 24, 24, 24, 24,
    24, 24, 24, 126, 3, 0, 7, 0, 3, 0, 0, 0, 0, 0, 0, 0, 15, 0, 3, 0,
    3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0,
    3, 0, 67, 0, 67, 0, 102, 0, 60, 0, 120, 0, 24, 0, 24, 0, 24, 0, 24, 0,
    24, 0, 24, 252, 24, 32, 24, 64, 25, 128, 27, 0, 31, 128, 29, 192, 24, 192, 24, 96,
    24, 112, 24, 56, 126, 126, 120, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24,
    24, 24, 24, 126, 121, 227, 192, 28, 52, 96, 28, 56, 48, 24, 56, 48, 24, 56, 48, 24,
    56, 48, 24, 56, 48, 24, 56, 48, 24, 56, 48, 24, 56, 48, 24, 56, 48, 126, 126, 252,
    121, 224, 30, 48, 28, 56, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24,
    24, 24, 126, 126, 7, 192, 24, 96, 48, 48, 48, 56, 112, 24, 112, 24, 112, 24, 112, 24,
    48, 56, 48, 48, 24, 96, 7, 192, 123, 224, 28, 56, 28, 24, 24, 28, 24, 12, 24, 12,
    24, 12, 24, 12, 24, 28, 28, 24, 30, 56, 25, 224, 24, 0, 24, 0, 24, 0, 24, 0,
    126, 0, 15, 190, 24, 120, 48, 56, 48, 56, 112, 56, 112, 56, 112, 56, 112, 56, 48, 56,
    48, 56, 24, 120, 15, 184, 0, 56, 0, 56, 0, 56, 0, 56, 0, 254, 121, 224, 27, 224,
    30, 32, 28, 0, 24, 0, 24, 0, 24, 0, 24, 0, 24, 0, 24, 0, 24, 0, 127, 0,
    15, 128, 48, 192, 32, 64, 112, 0, 56, 0, 63, 0, 15, 192, 1, 224, 0, 96, 96, 96,
    112, 192, 31, 128, 24, 0, 24, 0, 24, 0, 24, 0, 127, 128, 24, 0, 24, 0, 24, 0,
    24, 0, 24, 0, 24, 0, 24, 0, 24, 0, 24, 128, 25, 128, 15, 0, 120, 248, 24, 56,
    24, 56, 24, 56, 24, 56, 24, 56, 24, 56, 24, 56, 24, 56, 24, 56, 28, 120, 15, 190,
    126, 60, 24, 24, 24, 16, 28, 16, 12, 48, 14, 32, 6, 96, 6, 64, 7, 64, 3, 192,
    3, 128, 1, 128, 252, 48, 240, 48, 112, 96, 56, 112, 64, 24, 120, 64, 24, 216, 192, 28,
    152, 128, 12, 156, 128, 13, 141, 128, 15, 13, 0, 7, 7, 0, 7, 7, 0, 6, 6, 0,
    252, 248, 56, 96, 24, 64, 12, 128, 15, 128, 7, 0, 7, 0, 7, 128, 9, 192, 24, 224,
    16, 96, 121, 248, 126, 60, 24, 24, 24, 16, 28, 16, 12, 48, 14, 32, 6, 96, 6, 64,
    7, 64, 3, 192, 3, 128, 1, 128, 1, 0, 1, 0, 3, 0, 34, 0, 60, 0, 127, 240,
    96, 224, 96, 192, 1, 192, 3, 128, 7, 0, 14, 0, 12, 0, 28, 0, 56, 16, 112, 16,
    127, 240, 0, 240, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 3, 128,
    3, 0, 30, 0, 3, 0, 3, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128,
    1, 128, 1, 128, 0, 240, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24,
    24, 24, 24, 24, 24, 24, 24, 24, 24, 24, 30, 0, 3, 0, 3, 0, 3, 128, 3, 128,
    3, 128, 3, 128, 1, 128, 1, 128, 1, 192, 0, 240, 1, 192, 1, 128, 1, 128, 3, 128,
    3, 128, 3, 128, 3, 128, 3, 128, 3, 0, 3, 0, 30, 0, 0, 0, 0, 7, 128, 0,
    31, 225, 192, 16, 127, 128, 0, 30, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0,
};

inline constexpr Glyph k_simsun_glyphs[] = {
    {8, 0, 0, 0, 0, 0u},
    {11, 11, 18, 0, 5, 0u},
    {12, 13, 18, 0, 5, 36u},
    {20, 20, 17, 0, 6, 72u},
    {17, 17, 21, 0, 5, 123u},
    {23, 23, 18, 0, 5, 186u},
    {22, 22, 18, 0, 5, 240u},
    {7, 7, 18, 0, 5, 294u},
    {11, 11, 22, 0, 5, 312u},
    {11, 11, 22, 0, 5, 356u},
    {13, 13, 18, 0, 5, 400u},
    {20, 20, 15, 0, 8, 436u},
    {8, 8, 8, 0, 19, 481u},
    {10, 10, 8, 0, 15, 489u},
    {8, 8, 4, 0, 19, 505u},
    {9, 9, 20, 0, 5, 509u},
    {17, 17, 18, 0, 5, 549u},
    {17, 17, 18, 0, 5, 603u},
    {17, 17, 18, 0, 5, 657u},
    {17, 17, 18, 0, 5, 711u},
    {17, 17, 18, 0, 5, 765u},
    {17, 17, 18, 0, 5, 819u},
    {17, 17, 18, 0, 5, 873u},
    {17, 17, 18, 0, 5, 927u},
    {17, 17, 18, 0, 5, 981u},
    {17, 17, 18, 0, 5, 1035u},
    {9, 9, 12, 0, 11, 1089u},
    {9, 9, 16, 0, 11, 1113u},
    {20, 20, 15, 0, 8, 1145u},
    {20, 20, 12, 0, 11, 1190u},
    {20, 20, 15, 0, 8, 1226u},
    {14, 14, 18, 0, 5, 1271u},
    {24, 24, 21, 0, 6, 1307u},
    {19, 20, 18, -1, 5, 1370u},
    {20, 20, 18, 0, 5, 1424u},
    {19, 19, 18, 0, 5, 1478u},
    {21, 21, 18, 0, 5, 1532u},
    {18, 18, 18, 0, 5, 1586u},
    {17, 17, 18, 0, 5, 1640u},
    {20, 21, 18, 0, 5, 1694u},
    {23, 23, 18, 0, 5, 1748u},
    {11, 11, 18, 0, 5, 1802u},
    {11, 13, 23, -2, 5, 1838u},
    {21, 22, 18, 0, 5, 1884u},
    {17, 17, 18, 0, 5, 1938u},
    {27, 27, 18, 0, 5, 1992u},
    {22, 22, 18, 0, 5, 2064u},
    {21, 21, 18, 0, 5, 2118u},
    {18, 18, 18, 0, 5, 2172u},
    {21, 21, 22, 0, 5, 2226u},
    {20, 21, 18, 0, 5, 2292u},
    {17, 17, 18, 0, 5, 2346u},
    {18, 18, 18, 0, 5, 2400u},
    {21, 21, 18, 0, 5, 2454u},
    {19, 20, 18, -1, 5, 2508u},
    {27, 29, 18, -1, 5, 2562u},
    {19, 19, 18, 0, 5, 2634u},
    {17, 19, 18, -1, 5, 2688u},
    {18, 18, 18, 0, 5, 2742u},
    {11, 11, 21, 0, 5, 2796u},
    {9, 9, 20, 0, 5, 2838u},
    {11, 11, 21, 0, 5, 2878u},
    {20, 20, 18, 0, 5, 2920u},
    {12, 12, 6, 0, 23, 2974u},
    {12, 12, 19, 0, 4, 2986u},
    {16, 16, 12, 0, 11, 3024u},
    {17, 17, 18, 0, 5, 3048u},
    {15, 15, 12, 0, 11, 3102u},
    {17, 17, 18, 0, 5, 3126u},
    {15, 15, 12, 0, 11, 3180u},
    {10, 12, 18, 0, 5, 3204u},
    {17, 17, 17, 0, 11, 3240u},
    {17, 17, 18, 0, 5, 3291u},
    {9, 9, 17, 0, 6, 3345u},
    {9, 11, 22, -2, 6, 3379u},
    {17, 18, 18, 0, 5, 3423u},
    {9, 9, 18, 0, 5, 3477u},
    {25, 25, 12, 0, 11, 3513u},
    {17, 17, 12, 0, 11, 3561u},
    {16, 16, 12, 0, 11, 3597u},
    {17, 17, 17, 0, 11, 3621u},
    {17, 17, 17, 0, 11, 3672u},
    {13, 13, 12, 0, 11, 3723u},
    {14, 14, 12, 0, 11, 3747u},
    {11, 11, 16, 0, 7, 3771u},
    {17, 17, 12, 0, 11, 3803u},
    {14, 16, 12, -1, 11, 3839u},
    {21, 23, 12, -1, 11, 3863u},
    {14, 15, 12, 0, 11, 3899u},
    {14, 16, 17, -1, 11, 3923u},
    {14, 14, 12, 0, 11, 3957u},
    {15, 15, 21, 0, 5, 3981u},
    {9, 9, 24, 0, 5, 4023u},
    {15, 15, 21, 0, 5, 4071u},
    {20, 20, 11, 0, 12, 4113u},
};

inline constexpr uint8_t k_simsun_bitmap[] = {
    30, 0, 30, 0, 30, 0, 14, 0, 14, 0, 14, 0, 14, 0, 12, 0, 12, 0, 12, 0,
    12, 0, 12, 0, 12, 0, 0, 0, 14, 0, 30, 0, 30, 0, 14, 0, 57, 192, 57, 192,
    57, 192, 57, 192, 57, 192, 57, 192, 57, 192, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 227, 0, 0, 199, 0, 1, 199,
    0, 1, 198, 0, 31, 255, 192, 31, 255, 192, 31, 255, 192, 3, 140, 0, 3, 12, 0, 3,
    28, 0, 63, 255, 128, 63, 255, 128, 63, 255, 128, 6, 56, 0, 14, 56, 0, 14, 48, 0,
    14, 48, 0, 0, 128, 0, 0, 128, 0, 0, 128, 0, 7, 240, 0, 28, 156, 0, 28, 140,
    0, 60, 140, 0, 60, 128, 0, 63, 128, 0, 31, 240, 0, 31, 252, 0, 7, 252, 0, 1,
    254, 0, 0, 158, 0, 48, 158, 0, 48, 156, 0, 56, 152, 0, 15, 240, 0, 0, 128, 0,
    0, 128, 0, 0, 128, 0, 30, 0, 192, 51, 129, 128, 115, 131, 0, 113, 195, 0, 113, 198,
    0, 113, 198, 0, 113, 204, 0, 115, 152, 0, 51, 153, 240, 31, 51, 184, 0, 119, 28, 0,
    103, 28, 0, 199, 28, 0, 199, 28, 1, 135, 28, 3, 7, 28, 3, 3, 184, 6, 1, 240,
    1, 248, 0, 7, 142, 0, 15, 6, 0, 15, 6, 0, 15, 0, 0, 15, 128, 0, 7, 192,
    0, 15, 225, 248, 29, 240, 96, 56, 248, 96, 120, 124, 64, 120, 62, 192, 120, 31, 192, 124,
    15, 128, 124, 7, 192, 62, 15, 192, 31, 249, 224, 7, 225, 248, 56, 56, 56, 56, 56, 56,
    56, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 64, 1, 128, 3, 128, 7, 0,
    14, 0, 30, 0, 30, 0, 30, 0, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0,
    30, 0, 30, 0, 30, 0, 14, 0, 7, 0, 3, 128, 1, 128, 0, 64, 64, 0, 48, 0,
    24, 0, 28, 0, 14, 0, 15, 0, 15, 0, 7, 128, 7, 128, 7, 128, 7, 128, 7, 128,
    7, 128, 7, 128, 7, 128, 15, 0, 15, 0, 14, 0, 30, 0, 28, 0, 48, 0, 64, 0,
    6, 0, 6, 0, 70, 32, 118, 112, 62, 224, 15, 128, 15, 128, 62, 224, 118, 112, 70, 32,
    6, 0, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 96, 0, 0,
    96, 0, 0, 96, 0, 0, 96, 0, 0, 96, 0, 0, 96, 0, 31, 255, 192, 31, 255, 192,
    31, 255, 192, 0, 96, 0, 0, 96, 0, 0, 96, 0, 0, 96, 0, 0, 96, 0, 0, 96,
    0, 28, 28, 28, 56, 56, 112, 112, 64, 127, 128, 127, 128, 127, 128, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 28, 60, 60, 28, 3, 128, 3, 0, 7, 0, 7, 0, 6, 0, 14,
    0, 14, 0, 12, 0, 12, 0, 28, 0, 28, 0, 24, 0, 56, 0, 56, 0, 48, 0, 112,
    0, 112, 0, 96, 0, 224, 0, 224, 0, 3, 224, 0, 14, 56, 0, 28, 60, 0, 60, 28,
    0, 60, 30, 0, 60, 30, 0, 124, 30, 0, 124, 30, 0, 124, 31, 0, 124, 31, 0, 124,
    30, 0, 124, 30, 0, 60, 30, 0, 60, 30, 0, 60, 28, 0, 28, 60, 0, 14, 56, 0,
    3, 224, 0, 1, 224, 0, 7, 224, 0, 31, 224, 0, 25, 224, 0, 1, 224, 0, 1, 224,
    0, 1, 224, 0, 1, 224, 0, 1, 224, 0, 1, 224, 0, 1, 224, 0, 1, 224, 0, 1,
    224, 0, 1, 224, 0, 1, 224, 0, 1, 224, 0, 1, 224, 0, 31, 252, 0, 15, 224, 0,
    56, 248, 0, 48, 124, 0, 32, 124, 0, 0, 60, 0, 0, 60, 0, 0, 60, 0, 0, 124,
    0, 0, 120, 0, 0, 240, 0, 0, 224, 0, 1, 192, 0, 7, 0, 0, 14, 6, 0, 24,
    6, 0, 63, 254, 0, 63, 254, 0, 63, 254, 0, 15, 224, 0, 56, 248, 0, 48, 124, 0,
    48, 60, 0, 0, 60, 0, 0, 60, 0, 0, 124, 0, 0, 248, 0, 3, 240, 0, 0, 120,
    0, 0, 60, 0, 0, 62, 0, 0, 62, 0, 0, 62, 0, 32, 62, 0, 48, 60, 0, 56,
    124, 0, 15, 224, 0, 0, 248, 0, 1, 248, 0, 1, 248, 0, 3, 248, 0, 7, 248, 0,
    6, 248, 0, 12, 248, 0, 12, 248, 0, 24, 248, 0, 56, 248, 0, 48, 248, 0, 96, 248,
    0, 127, 255, 0, 0, 248, 0, 0, 248, 0, 0, 248, 0, 0, 248, 0, 3, 254, 0, 31,
    252, 0, 31, 252, 0, 31, 252, 0, 16, 0, 0, 16, 0, 0, 16, 0, 0, 23, 224, 0,
    24, 120, 0, 16, 124, 0, 0, 60, 0, 0, 62, 0, 0, 62, 0, 0, 62, 0, 0, 62,
    0, 32, 60, 0, 48, 124, 0, 56, 248, 0, 15, 224, 0, 1, 248, 0, 7, 14, 0, 14,
    6, 0, 28, 0, 0, 60, 0, 0, 60, 0, 0, 61, 240, 0, 62, 60, 0, 62, 62, 0,
    60, 30, 0, 60, 30, 0, 60, 30, 0, 60, 30, 0, 60, 30, 0, 28, 30, 0, 30, 60,
    0, 14, 60, 0, 3, 240, 0, 63, 254, 0, 63, 254, 0, 63, 254, 0, 48, 12, 0, 48,
    28, 0, 0, 28, 0, 0, 56, 0, 0, 56, 0, 0, 48, 0, 0, 112, 0, 0, 96, 0,
    0, 224, 0, 0, 192, 0, 1, 192, 0, 1, 128, 0, 3, 128, 0, 3, 0, 0, 7, 0,
    0, 7, 240, 0, 30, 60, 0, 62, 60, 0, 60, 62, 0, 60, 62, 0, 60, 62, 0, 62,
    60, 0, 30, 56, 0, 7, 240, 0, 30, 60, 0, 60, 62, 0, 124, 30, 0, 124, 30, 0,
    124, 30, 0, 124, 30, 0, 60, 62, 0, 30, 60, 0, 7, 240, 0, 7, 224, 0, 30, 120,
    0, 60, 60, 0, 60, 60, 0, 124, 62, 0, 124, 62, 0, 124, 62, 0, 124, 62, 0, 60,
    62, 0, 60, 62, 0, 30, 126, 0, 15, 222, 0, 0, 30, 0, 0, 28, 0, 0, 60, 0,
    48, 56, 0, 56, 112, 0, 15, 192, 0, 28, 0, 62, 0, 62, 0, 28, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 28, 0, 62, 0, 62, 0, 28, 0, 28, 0, 62, 0, 62, 0, 28,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 28, 0, 28, 0, 28, 0, 28, 0, 56, 0, 120,
    0, 112, 0, 32, 0, 0, 0, 192, 0, 3, 192, 0, 31, 192, 0, 255, 0, 3, 248, 0,
    31, 192, 0, 31, 0, 0, 30, 0, 0, 31, 192, 0, 3, 248, 0, 0, 255, 0, 0, 31,
    192, 0, 3, 192, 0, 0, 192, 0, 0, 0, 31, 255, 192, 31, 255, 192, 31, 255, 192, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 31, 255, 192, 31, 255, 192, 31, 255, 192, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 16, 0, 0, 30, 0, 0, 31, 128, 0, 15, 240, 0, 1, 254,
    0, 0, 63, 128, 0, 7, 192, 0, 7, 192, 0, 63, 128, 1, 254, 0, 15, 240, 0, 31,
    128, 0, 30, 0, 0, 16, 0, 0, 0, 0, 0, 31, 192, 49, 224, 32, 240, 32, 248, 0,
    120, 0, 120, 0, 248, 0, 248, 0, 240, 3, 224, 7, 128, 6, 0, 6, 0, 0, 0, 7,
    0, 15, 0, 15, 0, 7, 0, 0, 127, 0, 1, 192, 192, 7, 0, 32, 14, 0, 16, 28,
    0, 8, 24, 125, 140, 56, 227, 132, 49, 195, 132, 49, 193, 132, 49, 193, 132, 49, 193, 132,
    49, 193, 132, 49, 193, 140, 49, 195, 136, 56, 227, 208, 24, 125, 192, 28, 0, 0, 14, 0,
    0, 7, 0, 0, 1, 192, 192, 0, 127, 0, 0, 112, 0, 0, 240, 0, 0, 248, 0, 1,
    248, 0, 1, 248, 0, 1, 124, 0, 3, 124, 0, 3, 62, 0, 2, 62, 0, 6, 62, 0,
    6, 31, 0, 12, 31, 0, 15, 255, 0, 8, 15, 128, 24, 7, 128, 16, 7, 192, 48, 7,
    192, 124, 15, 240, 127, 254, 0, 31, 15, 128, 31, 7, 128, 31, 7, 192, 31, 7, 192, 31,
    7, 192, 31, 7, 128, 31, 15, 0, 31, 254, 0, 31, 15, 128, 31, 7, 192, 31, 3, 224,
    31, 3, 224, 31, 3, 224, 31, 3, 224, 31, 7, 192, 31, 15, 128, 127, 254, 0, 1, 252,
    0, 7, 135, 0, 15, 1, 128, 30, 1, 128, 62, 0, 128, 60, 0, 0, 124, 0, 0, 124,
    0, 0, 124, 0, 0, 124, 0, 0, 124, 0, 0, 124, 0, 0, 60, 0, 0, 62, 1, 192,
    30, 1, 128, 15, 3, 128, 7, 135, 0, 1, 252, 0, 127, 252, 0, 31, 15, 0, 31, 7,
    128, 31, 3, 192, 31, 3, 224, 31, 3, 224, 31, 1, 240, 31, 1, 240, 31, 1, 240, 31,
    1, 240, 31, 1, 240, 31, 1, 240, 31, 3, 224, 31, 3, 224, 31, 3, 192, 31, 7, 128,
    31, 15, 0, 127, 252, 0, 127, 255, 128, 31, 1, 128, 31, 1, 128, 31, 0, 0, 31, 0,
    0, 31, 0, 0, 31, 12, 0, 31, 12, 0, 31, 252, 0, 31, 12, 0, 31, 12, 0, 31,
    0, 0, 31, 0, 0, 31, 0, 0, 31, 0, 0, 31, 1, 128, 31, 1, 128, 127, 255, 128,
    127, 255, 128, 31, 1, 128, 31, 1, 128, 31, 0, 0, 31, 0, 0, 31, 0, 0, 31, 12,
    0, 31, 12, 0, 31, 252, 0, 31, 12, 0, 31, 12, 0, 31, 0, 0, 31, 0, 0, 31,
    0, 0, 31, 0, 0, 31, 0, 0, 31, 0, 0, 127, 224, 0, 1, 252, 0, 7, 131, 128,
    15, 1, 192, 30, 0, 192, 62, 0, 192, 60, 0, 0, 124, 0, 0, 124, 0, 0, 124, 0,
    0, 124, 15, 224, 124, 3, 224, 124, 3, 224, 60, 3, 224, 62, 3, 224, 30, 3, 224, 15,
    3, 224, 7, 135, 128, 1, 254, 0, 127, 199, 252, 31, 1, 224, 31, 1, 224, 31, 1, 224,
    31, 1, 224, 31, 1, 224, 31, 1, 224, 31, 1, 224, 31, 255, 224, 31, 1, 224, 31, 1,
    224, 31, 1, 224, 31, 1, 224, 31, 1, 224, 31, 1, 224, 31, 1, 224, 31, 1, 224, 127,
    199, 252, 127, 192, 31, 0, 31, 0, 31, 0, 31, 0, 31, 0, 31, 0, 31, 0, 31, 0,
    31, 0, 31, 0, 31, 0, 31, 0, 31, 0, 31, 0, 31, 0, 31, 0, 127, 192, 31, 240,
    3, 192, 3, 192, 3, 192, 3, 192, 3, 192, 3, 192, 3, 192, 3, 192, 3, 192, 3, 192,
    3, 192, 3, 192, 3, 192, 3, 192, 3, 192, 3, 192, 3, 192, 3, 192, 3, 192, 199, 192,
    199, 128, 62, 0, 127, 199, 240, 31, 1, 128, 31, 3, 0, 31, 6, 0, 31, 12, 0, 31,
    24, 0, 31, 112, 0, 31, 240, 0, 31, 248, 0, 31, 252, 0, 31, 124, 0, 31, 62, 0,
    31, 31, 0, 31, 15, 128, 31, 7, 192, 31, 7, 224, 31, 3, 224, 127, 193, 252, 127, 192,
    0, 31, 0, 0, 31, 0, 0, 31, 0, 0, 31, 0, 0, 31, 0, 0, 31, 0, 0, 31,
    0, 0, 31, 0, 0, 31, 0, 0, 31, 0, 0, 31, 0, 0, 31, 0, 0, 31, 0, 0,
    31, 1, 0, 31, 1, 0, 31, 1, 0, 127, 255, 0, 127, 0, 63, 128, 31, 128, 62, 0,
    31, 128, 126, 0, 31, 192, 126, 0, 27, 192, 222, 0, 27, 224, 158, 0, 25, 225, 158, 0,
    25, 241, 30, 0, 25, 243, 30, 0, 24, 243, 30, 0, 24, 254, 30, 0, 24, 126, 30, 0,
    24, 124, 30, 0, 24, 60, 30, 0, 24, 56, 30, 0, 24, 0, 30, 0, 24, 0, 30, 0,
    126, 0, 255, 128, 126, 1, 248, 31, 0, 96, 31, 128, 96, 31, 128, 96, 31, 192, 96, 27,
    224, 96, 27, 240, 96, 25, 248, 96, 24, 248, 96, 24, 124, 96, 24, 62, 96, 24, 63, 96,
    24, 31, 224, 24, 15, 224, 24, 7, 224, 24, 3, 224, 24, 3, 224, 126, 1, 224, 1, 252,
    0, 7, 143, 0, 30, 7, 128, 30, 3, 192, 62, 3, 224, 60, 1, 224, 124, 1, 240, 124,
    1, 240, 124, 1, 240, 124, 1, 240, 124, 1, 240, 124, 1, 240, 60, 1, 224, 62, 3, 224,
    30, 3, 192, 30, 7, 128, 7, 143, 0, 1, 252, 0, 127, 252, 0, 31, 31, 0, 31, 15,
    128, 31, 15, 128, 31, 15, 128, 31, 15, 128, 31, 15, 128, 31, 15, 128, 31, 31, 0, 31,
    252, 0, 31, 0, 0, 31, 0, 0, 31, 0, 0, 31, 0, 0, 31, 0, 0, 31, 0, 0,
    31, 0, 0, 127, 224, 0, 1, 252, 0, 7, 143, 0, 30, 7, 128, 30, 3, 192, 62, 3,
    224, 60, 1, 224, 124, 1, 240, 124, 1, 240, 124, 1, 240, 124, 1, 240, 124, 1, 240, 124,
    1, 240, 60, 1, 224, 62, 3, 224, 30, 3, 192, 30, 7, 128, 7, 143, 0, 1, 252, 0,
    0, 24, 0, 0, 31, 128, 0, 15, 128, 0, 3, 128, 127, 252, 0, 31, 31, 0, 31, 15,
    128, 31, 7, 128, 31, 7, 128, 31, 7, 128, 31, 7, 128, 31, 15, 128, 31, 31, 0, 31,
    252, 0, 31, 62, 0, 31, 31, 0, 31, 31, 0, 31, 15, 128, 31, 15, 128, 31, 7, 192,
    31, 3, 192, 127, 195, 240, 7, 240, 0, 28, 30, 0, 56, 6, 0, 56, 6, 0, 56, 0,
    0, 62, 0, 0, 63, 192, 0, 63, 248, 0, 63, 254, 0, 15, 254, 0, 3, 255, 0, 0,
    63, 0, 0, 15, 0, 32, 15, 0, 48, 15, 0, 48, 14, 0, 60, 28, 0, 15, 240, 0,
    255, 255, 192, 193, 224, 192, 193, 224, 192, 193, 224, 192, 1, 224, 0, 1, 224, 0, 1, 224,
    0, 1, 224, 0, 1, 224, 0, 1, 224, 0, 1, 224, 0, 1, 224, 0, 1, 224, 0, 1,
    224, 0, 1, 224, 0, 1, 224, 0, 1, 224, 0, 15, 252, 0, 127, 195, 240, 31, 0, 64,
    31, 0, 64, 31, 0, 64, 31, 0, 64, 31, 0, 64, 31, 0, 64, 31, 0, 64, 31, 0,
    64, 31, 0, 64, 31, 0, 64, 31, 0, 192, 31, 0, 192, 31, 0, 192, 15, 128, 128, 15,
    195, 128, 7, 255, 0, 1, 252, 0, 127, 129, 240, 31, 0, 64, 31, 0, 192, 31, 0, 192,
    15, 129, 128, 15, 129, 128, 7, 129, 0, 7, 195, 0, 7, 195, 0, 3, 226, 0, 3, 230,
    0, 1, 228, 0, 1, 252, 0, 1, 252, 0, 0, 248, 0, 0, 248, 0, 0, 112, 0, 0,
    112, 0, 127, 131, 193, 240, 30, 3, 192, 64, 31, 3, 192, 192, 31, 7, 224, 192, 15, 7,
    224, 128, 15, 133, 224, 128, 15, 141, 241, 128, 15, 141, 241, 128, 7, 136, 241, 0, 7, 216,
    251, 0, 7, 216, 251, 0, 3, 208, 122, 0, 3, 240, 126, 0, 3, 240, 126, 0, 3, 240,
    124, 0, 1, 224, 60, 0, 1, 224, 60, 0, 1, 224, 60, 0, 255, 143, 192, 62, 6, 0,
    31, 6, 0, 31, 12, 0, 15, 152, 0, 7, 216, 0, 7, 240, 0, 3, 224, 0, 3, 240,
    0, 1, 240, 0, 1, 248, 0, 3, 248, 0, 6, 124, 0, 6, 62, 0, 12, 62, 0, 8,
    31, 0, 24, 31, 128, 254, 63, 224, 127, 135, 192, 31, 1, 128, 31, 3, 0, 15, 131, 0,
    15, 134, 0, 7, 196, 0, 7, 204, 0, 3, 232, 0, 3, 248, 0, 1, 240, 0, 1, 240,
    0, 1, 240, 0, 1, 240, 0, 1, 240, 0, 1, 240, 0, 1, 240, 0, 1, 240, 0, 7,
    252, 0, 127, 255, 128, 96, 31, 128, 96, 63, 0, 96, 62, 0, 0, 126, 0, 0, 252, 0,
    0, 248, 0, 1, 248, 0, 3, 240, 0, 3, 224, 0, 7, 224, 0, 15, 192, 0, 31, 128,
    0, 31, 128, 0, 63, 0, 0, 126, 1, 128, 126, 1, 128, 127, 255, 128, 31, 192, 30, 0,
    30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0,
    30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 31, 192, 224, 0,
    224, 0, 96, 0, 112, 0, 112, 0, 48, 0, 56, 0, 56, 0, 24, 0, 28, 0, 28, 0,
    12, 0, 12, 0, 14, 0, 14, 0, 6, 0, 7, 0, 7, 0, 3, 0, 3, 128, 63, 0,
    15, 0, 15, 0, 15, 0, 15, 0, 15, 0, 15, 0, 15, 0, 15, 0, 15, 0, 15, 0,
    15, 0, 15, 0, 15, 0, 15, 0, 15, 0, 15, 0, 15, 0, 15, 0, 15, 0, 63, 0,
    0, 240, 0, 1, 248, 0, 1, 252, 0, 3, 158, 0, 7, 14, 0, 14, 7, 0, 28, 1,
    128, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 255, 240, 255, 240, 56, 0, 28, 0, 14, 0, 7, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 31, 224, 48, 240, 32, 120, 0, 120, 15, 248, 60, 120, 120, 120, 120, 120,
    120, 120, 120, 120, 60, 248, 31, 126, 124, 0, 0, 60, 0, 0, 60, 0, 0, 60, 0, 0,
    60, 0, 0, 60, 0, 0, 63, 248, 0, 63, 60, 0, 62, 30, 0, 62, 30, 0, 62, 31,
    0, 60, 31, 0, 60, 31, 0, 62, 31, 0, 62, 30, 0, 62, 30, 0, 63, 60, 0, 127,
    248, 0, 7, 224, 30, 56, 60, 24, 124, 8, 124, 0, 124, 0, 124, 0, 124, 0, 124, 24,
    60, 24, 30, 48, 7, 224, 0, 124, 0, 0, 60, 0, 0, 60, 0, 0, 60, 0, 0, 60,
    0, 0, 60, 0, 15, 188, 0, 30, 124, 0, 60, 60, 0, 124, 60, 0, 124, 60, 0, 124,
    60, 0, 124, 60, 0, 124, 60, 0, 124, 60, 0, 60, 60, 0, 30, 124, 0, 15, 191, 0,
    7, 192, 30, 112, 60, 120, 124, 120, 124, 60, 124, 60, 127, 252, 124, 0, 124, 12, 60, 24,
    30, 48, 7, 224, 7, 240, 14, 48, 30, 48, 30, 0, 30, 0, 30, 0, 127, 192, 30, 0,
    30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 127, 128,
    15, 191, 0, 30, 124, 0, 60, 60, 0, 124, 60, 0, 124, 60, 0, 124, 60, 0, 124, 60,
    0, 124, 60, 0, 124, 60, 0, 60, 60, 0, 30, 124, 0, 15, 188, 0, 0, 60, 0, 0,
    60, 0, 48, 60, 0, 56, 120, 0, 15, 224, 0, 126, 0, 0, 30, 0, 0, 30, 0, 0,
    30, 0, 0, 30, 0, 0, 30, 0, 0, 30, 248, 0, 31, 60, 0, 30, 30, 0, 30, 30,
    0, 30, 30, 0, 30, 30, 0, 30, 30, 0, 30, 30, 0, 30, 30, 0, 30, 30, 0, 30,
    30, 0, 127, 127, 128, 28, 0, 62, 0, 62, 0, 28, 0, 0, 0, 126, 0, 30, 0, 30,
    0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 127, 128, 7,
    0, 15, 0, 15, 0, 7, 0, 0, 0, 31, 128, 7, 128, 7, 128, 7, 128, 7, 128, 7,
    128, 7, 128, 7, 128, 7, 128, 7, 128, 7, 128, 7, 128, 7, 128, 7, 128, 207, 128, 207,
    0, 252, 0, 126, 0, 0, 30, 0, 0, 30, 0, 0, 30, 0, 0, 30, 0, 0, 30, 0,
    0, 30, 63, 0, 30, 24, 0, 30, 48, 0, 30, 96, 0, 30, 224, 0, 31, 240, 0, 31,
    240, 0, 30, 120, 0, 30, 124, 0, 30, 62, 0, 30, 30, 0, 127, 63, 128, 126, 0, 30,
    0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30,
    0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 127, 128, 126, 248, 248, 0, 31, 63, 60,
    0, 30, 30, 30, 0, 30, 30, 30, 0, 30, 30, 30, 0, 30, 30, 30, 0, 30, 30, 30,
    0, 30, 30, 30, 0, 30, 30, 30, 0, 30, 30, 30, 0, 30, 30, 30, 0, 127, 127, 127,
    128, 126, 248, 0, 31, 60, 0, 30, 30, 0, 30, 30, 0, 30, 30, 0, 30, 30, 0, 30,
    30, 0, 30, 30, 0, 30, 30, 0, 30, 30, 0, 30, 30, 0, 127, 127, 128, 7, 224, 30,
    120, 60, 60, 124, 62, 124, 62, 124, 62, 124, 62, 124, 62, 124, 62, 60, 60, 30, 120, 7,
    224, 127, 248, 0, 63, 60, 0, 62, 30, 0, 62, 30, 0, 62, 31, 0, 60, 31, 0, 60,
    31, 0, 62, 31, 0, 62, 30, 0, 62, 30, 0, 63, 60, 0, 63, 248, 0, 60, 0, 0,
    60, 0, 0, 60, 0, 0, 60, 0, 0, 127, 0, 0, 15, 191, 0, 30, 124, 0, 60, 60,
    0, 124, 60, 0, 124, 60, 0, 124, 60, 0, 124, 60, 0, 124, 60, 0, 124, 60, 0, 60,
    60, 0, 30, 124, 0, 15, 188, 0, 0, 60, 0, 0, 60, 0, 0, 60, 0, 0, 60, 0,
    0, 255, 0, 126, 248, 31, 24, 30, 24, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30,
    0, 30, 0, 30, 0, 127, 128, 31, 192, 56, 112, 120, 48, 120, 48, 126, 0, 63, 192, 31,
    240, 1, 240, 96, 240, 96, 240, 112, 240, 31, 192, 62, 0, 62, 0, 62, 0, 62, 0, 127,
    192, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 62, 96, 30,
    96, 15, 192, 124, 126, 0, 60, 30, 0, 60, 30, 0, 60, 30, 0, 60, 30, 0, 60, 30,
    0, 60, 30, 0, 60, 30, 0, 62, 30, 0, 30, 62, 0, 30, 62, 0, 15, 223, 128, 127,
    31, 60, 12, 30, 12, 30, 24, 31, 24, 15, 16, 15, 48, 7, 160, 7, 224, 7, 224, 3,
    192, 3, 192, 127, 28, 124, 62, 28, 16, 30, 30, 16, 30, 62, 48, 31, 63, 32, 15, 111,
    32, 15, 111, 96, 15, 199, 192, 7, 199, 192, 7, 199, 192, 7, 131, 128, 3, 131, 128, 255,
    124, 62, 48, 30, 32, 31, 96, 15, 192, 7, 128, 7, 192, 15, 192, 27, 224, 17, 240, 48,
    240, 249, 252, 127, 31, 62, 12, 30, 8, 30, 24, 15, 24, 15, 16, 15, 176, 7, 160, 7,
    224, 3, 224, 3, 192, 1, 192, 1, 128, 1, 128, 49, 128, 51, 0, 62, 0, 127, 248, 96,
    248, 97, 240, 3, 224, 7, 224, 7, 192, 15, 128, 31, 0, 63, 0, 62, 24, 124, 24, 127,
    248, 1, 248, 3, 192, 3, 192, 3, 192, 3, 192, 3, 192, 3, 192, 3, 192, 7, 192, 7,
    128, 63, 0, 7, 128, 7, 192, 3, 192, 3, 192, 3, 192, 3, 192, 3, 192, 3, 192, 3,
    192, 1, 248, 28, 0, 28, 0, 28, 0, 28, 0, 28, 0, 28, 0, 28, 0, 28, 0, 28,
    0, 28, 0, 28, 0, 28, 0, 28, 0, 28, 0, 28, 0, 28, 0, 28, 0, 28, 0, 28,
    0, 28, 0, 28, 0, 28, 0, 28, 0, 28, 0, 63, 0, 7, 128, 3, 192, 3, 192, 3,
    192, 3, 192, 3, 192, 3, 192, 3, 192, 3, 224, 0, 248, 3, 224, 3, 192, 3, 192, 3,
    192, 3, 192, 3, 192, 3, 192, 3, 192, 7, 128, 63, 0, 0, 0, 0, 7, 128, 0, 31,
    241, 192, 31, 255, 192, 24, 127, 128, 0, 30, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
};

inline constexpr Glyph k_kaiti_glyphs[] = {
    {14, 0, 0, 0, 0, 0u},
    {14, 14, 18, 0, 5, 0u},
    {14, 14, 18, 0, 5, 36u},
    {14, 15, 18, 0, 5, 72u},
    {14, 14, 22, 0, 5, 108u},
    {14, 15, 18, 0, 5, 152u},
    {14, 15, 18, 0, 5, 188u},
    {14, 14, 18, 0, 5, 224u},
    {14, 14, 21, 0, 5, 260u},
    {14, 14, 21, 0, 5, 302u},
    {14, 14, 18, 0, 5, 344u},
    {14, 14, 14, 0, 9, 380u},
    {14, 14, 7, 0, 19, 408u},
    {14, 14, 8, 0, 15, 422u},
    {14, 14, 4, 0, 19, 438u},
    {14, 14, 20, 0, 5, 446u},
    {14, 14, 18, 0, 5, 486u},
    {14, 14, 18, 0, 5, 522u},
    {14, 14, 18, 0, 5, 558u},
    {14, 14, 18, 0, 5, 594u},
    {14, 14, 18, 0, 5, 630u},
    {14, 14, 18, 0, 5, 666u},
    {14, 14, 18, 0, 5, 702u},
    {14, 14, 18, 0, 5, 738u},
    {14, 14, 18, 0, 5, 774u},
    {14, 14, 18, 0, 5, 810u},
    {14, 14, 12, 0, 11, 846u},
    {14, 14, 15, 0, 11, 870u},
    {14, 14, 13, 0, 10, 900u},
    {14, 14, 11, 0, 12, 926u},
    {14, 14, 13, 0, 10, 948u},
    {14, 14, 18, 0, 5, 974u},
    {14, 14, 20, 0, 7, 1010u},
    {14, 15, 18, 0, 5, 1050u},
    {14, 14, 18, 0, 5, 1086u},
    {14, 14, 18, 0, 5, 1122u},
    {14, 14, 18, 0, 5, 1158u},
    {14, 14, 18, 0, 5, 1194u},
    {14, 14, 18, 0, 5, 1230u},
    {14, 14, 18, 0, 5, 1266u},
    {14, 14, 18, 0, 5, 1302u},
    {14, 14, 18, 0, 5, 1338u},
    {14, 14, 18, 0, 5, 1374u},
    {14, 15, 18, 0, 5, 1410u},
    {14, 14, 18, 0, 5, 1446u},
    {14, 14, 18, 0, 5, 1482u},
    {14, 14, 18, 0, 5, 1518u},
    {14, 14, 18, 0, 5, 1554u},
    {14, 14, 18, 0, 5, 1590u},
    {14, 14, 21, 0, 5, 1626u},
    {14, 15, 18, 0, 5, 1668u},
    {14, 14, 18, 0, 5, 1704u},
    {14, 14, 18, 0, 5, 1740u},
    {14, 14, 18, 0, 5, 1776u},
    {14, 14, 18, 0, 5, 1812u},
    {14, 15, 18, 0, 5, 1848u},
    {14, 15, 18, 0, 5, 1884u},
    {14, 15, 18, 0, 5, 1920u},
    {14, 14, 18, 0, 5, 1956u},
    {14, 14, 21, 0, 5, 1992u},
    {14, 14, 20, 0, 5, 2034u},
    {14, 14, 21, 0, 5, 2074u},
    {14, 14, 18, 0, 5, 2116u},
    {14, 15, 6, 0, 23, 2152u},
    {14, 14, 19, 0, 4, 2164u},
    {14, 14, 13, 0, 10, 2202u},
    {14, 14, 18, 0, 5, 2228u},
    {14, 14, 13, 0, 10, 2264u},
    {14, 14, 18, 0, 5, 2290u},
    {14, 14, 13, 0, 10, 2326u},
    {14, 14, 18, 0, 5, 2352u},
    {14, 14, 18, 0, 10, 2388u},
    {14, 14, 18, 0, 5, 2424u},
    {14, 14, 18, 0, 5, 2460u},
    {14, 14, 23, 0, 5, 2496u},
    {14, 15, 18, 0, 5, 2542u},
    {14, 14, 18, 0, 5, 2578u},
    {14, 14, 13, 0, 10, 2614u},
    {14, 14, 13, 0, 10, 2640u},
    {14, 14, 13, 0, 10, 2666u},
    {14, 14, 18, 0, 10, 2692u},
    {14, 14, 18, 0, 10, 2728u},
    {14, 14, 13, 0, 10, 2764u},
    {14, 14, 13, 0, 10, 2790u},
    {14, 14, 17, 0, 6, 2816u},
    {14, 14, 13, 0, 10, 2850u},
    {14, 14, 13, 0, 10, 2876u},
    {14, 15, 13, 0, 10, 2902u},
    {14, 14, 13, 0, 10, 2928u},
    {14, 14, 18, 0, 10, 2954u},
    {14, 14, 13, 0, 10, 2990u},
    {14, 14, 22, 0, 5, 3016u},
    {14, 14, 24, 0, 5, 3060u},
    {14, 14, 22, 0, 5, 3108u},
    {14, 14, 9, 0, 14, 3152u},
};

inline constexpr uint8_t k_kaiti_bitmap[] = {
    3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0,
    3, 0, 3, 0, 0, 0, 0, 0, 0, 0, 3, 0, 3, 0, 3, 0, 12, 192, 12, 192,
    12, 192, 12, 192, 12, 192, 12, 192, 12, 192, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 24, 3, 16, 2, 48, 6, 48,
    6, 48, 127, 252, 127, 252, 12, 96, 12, 96, 12, 64, 8, 192, 255, 248, 255, 248, 24, 192,
    25, 128, 49, 128, 49, 128, 49, 128, 1, 0, 1, 0, 1, 0, 7, 192, 31, 240, 25, 16,
    57, 0, 49, 0, 57, 0, 31, 0, 15, 224, 1, 240, 1, 56, 1, 24, 1, 24, 49, 56,
    63, 240, 15, 192, 1, 0, 1, 0, 1, 0, 1, 0, 60, 0, 126, 0, 99, 0, 195, 0,
    99, 0, 126, 12, 60, 48, 0, 96, 1, 128, 7, 0, 12, 0, 48, 240, 97, 248, 1, 140,
    1, 12, 1, 140, 1, 248, 0, 240, 7, 128, 15, 192, 28, 64, 24, 0, 24, 0, 24, 0,
    28, 0, 14, 0, 62, 0, 51, 12, 99, 140, 97, 204, 96, 204, 96, 120, 112, 56, 56, 120,
    63, 248, 15, 140, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 192, 0, 192, 1, 128, 1, 128, 3, 0, 3, 0, 3, 0, 7, 0, 6, 0, 6, 0,
    6, 0, 6, 0, 6, 0, 7, 0, 3, 0, 3, 0, 3, 0, 1, 128, 1, 128, 0, 192,
    0, 192, 12, 0, 6, 0, 6, 0, 3, 0, 3, 0, 3, 128, 1, 128, 1, 128, 1, 128,
    1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 3, 128, 3, 0, 3, 0, 6, 0,
    6, 0, 12, 0, 1, 0, 1, 0, 49, 16, 25, 96, 7, 128, 7, 128, 25, 96, 49, 16,
    1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 127, 248, 127, 248, 3, 0, 3, 0, 3, 0,
    3, 0, 3, 0, 0, 0, 0, 0, 3, 128, 3, 128, 3, 128, 3, 0, 7, 0, 6, 0,
    6, 0, 15, 192, 15, 192, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 128,
    3, 128, 3, 128, 3, 128, 0, 48, 0, 48, 0, 96, 0, 96, 0, 224, 0, 192, 1, 192,
    1, 128, 3, 128, 3, 0, 3, 0, 6, 0, 6, 0, 12, 0, 12, 0, 28, 0, 24, 0,
    56, 0, 48, 0, 112, 0, 7, 128, 15, 224, 28, 112, 56, 48, 48, 48, 48, 56, 48, 56,
    48, 56, 51, 56, 51, 56, 48, 56, 48, 56, 48, 56, 48, 48, 56, 48, 28, 112, 15, 224,
    7, 128, 7, 128, 31, 128, 25, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128,
    1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 31, 248, 31, 248, 15, 128,
    63, 224, 48, 240, 0, 112, 0, 48, 0, 48, 0, 48, 0, 112, 0, 96, 0, 192, 1, 128,
    3, 128, 7, 0, 14, 0, 28, 0, 56, 0, 63, 240, 63, 240, 15, 128, 63, 224, 48, 112,
    0, 112, 0, 48, 0, 48, 0, 112, 0, 224, 7, 192, 7, 192, 0, 112, 0, 48, 0, 56,
    0, 56, 0, 48, 32, 112, 63, 224, 31, 192, 0, 224, 1, 224, 1, 224, 3, 96, 2, 96,
    6, 96, 12, 96, 12, 96, 24, 96, 56, 96, 48, 96, 96, 96, 127, 248, 127, 248, 0, 96,
    0, 96, 0, 96, 0, 96, 63, 224, 63, 224, 56, 0, 56, 0, 56, 0, 56, 0, 63, 128,
    63, 224, 48, 240, 0, 112, 0, 48, 0, 48, 0, 48, 0, 48, 0, 112, 32, 240, 63, 224,
    31, 128, 3, 192, 15, 240, 28, 16, 24, 0, 48, 0, 48, 0, 51, 192, 63, 224, 60, 112,
    56, 56, 48, 56, 48, 24, 48, 24, 48, 56, 56, 56, 28, 112, 15, 224, 7, 192, 63, 248,
    63, 240, 0, 48, 0, 112, 0, 96, 0, 96, 0, 224, 0, 192, 0, 192, 1, 192, 1, 128,
    3, 128, 3, 0, 3, 0, 7, 0, 6, 0, 14, 0, 14, 0, 7, 192, 31, 224, 56, 112,
    56, 48, 48, 48, 48, 48, 56, 48, 24, 112, 15, 192, 15, 224, 56, 112, 48, 56, 48, 56,
    48, 56, 48, 56, 56, 112, 31, 240, 15, 192, 15, 128, 31, 224, 56, 112, 48, 48, 48, 48,
    48, 56, 48, 56, 48, 56, 48, 56, 56, 120, 31, 216, 15, 184, 0, 48, 0, 48, 0, 112,
    16, 224, 31, 192, 15, 128, 3, 128, 3, 128, 3, 128, 3, 128, 0, 0, 0, 0, 0, 0,
    0, 0, 3, 128, 3, 128, 3, 128, 3, 128, 3, 128, 3, 128, 3, 128, 3, 128, 0, 0,
    0, 0, 0, 0, 0, 0, 3, 128, 3, 128, 3, 128, 3, 0, 7, 0, 6, 0, 6, 0,
    0, 8, 0, 56, 1, 248, 7, 192, 62, 0, 120, 0, 120, 0, 62, 0, 7, 192, 1, 248,
    0, 56, 0, 8, 0, 0, 127, 248, 127, 248, 0, 0, 0, 0, 0, 0, 127, 248, 127, 248,
    0, 0, 0, 0, 0, 0, 0, 0, 64, 0, 120, 0, 62, 0, 15, 192, 1, 240, 0, 56,
    0, 56, 1, 240, 15, 192, 62, 0, 120, 0, 64, 0, 0, 0, 7, 192, 31, 224, 24, 112,
    16, 48, 0, 48, 0, 48, 0, 96, 0, 224, 1, 192, 3, 128, 3, 0, 3, 0, 3, 0,
    0, 0, 0, 0, 3, 0, 3, 0, 3, 0, 3, 224, 15, 240, 28, 56, 48, 24, 112, 12,
    97, 236, 99, 252, 71, 28, 198, 12, 198, 12, 198, 12, 198, 12, 71, 28, 99, 252, 97, 236,
    48, 0, 56, 0, 28, 0, 15, 240, 3, 240, 3, 128, 7, 128, 7, 128, 6, 192, 14, 192,
    12, 192, 12, 224, 12, 96, 28, 96, 24, 96, 24, 112, 56, 48, 63, 240, 63, 248, 112, 56,
    112, 24, 96, 28, 96, 28, 63, 192, 63, 224, 48, 112, 48, 56, 48, 56, 48, 56, 48, 48,
    48, 112, 63, 224, 63, 224, 48, 48, 48, 24, 48, 24, 48, 24, 48, 24, 48, 56, 63, 240,
    63, 192, 3, 224, 15, 248, 30, 24, 24, 0, 56, 0, 56, 0, 48, 0, 48, 0, 48, 0,
    48, 0, 48, 0, 48, 0, 56, 0, 56, 0, 24, 0, 30, 24, 15, 248, 3, 224, 63, 0,
    63, 192, 48, 224, 48, 112, 48, 48, 48, 56, 48, 56, 48, 56, 48, 56, 48, 56, 48, 56,
    48, 56, 48, 56, 48, 48, 48, 112, 48, 224, 63, 192, 63, 0, 63, 248, 63, 248, 56, 0,
    56, 0, 56, 0, 56, 0, 56, 0, 56, 0, 63, 240, 63, 240, 56, 0, 56, 0, 56, 0,
    56, 0, 56, 0, 56, 0, 63, 248, 63, 248, 31, 248, 31, 248, 24, 0, 24, 0, 24, 0,
    24, 0, 24, 0, 24, 0, 31, 240, 31, 240, 24, 0, 24, 0, 24, 0, 24, 0, 24, 0,
    24, 0, 24, 0, 24, 0, 3, 224, 15, 240, 28, 16, 56, 0, 48, 0, 48, 0, 112, 0,
    112, 0, 112, 0, 112, 248, 112, 248, 112, 24, 48, 24, 48, 24, 56, 24, 28, 56, 15, 240,
    3, 224, 48, 56, 48, 56, 48, 56, 48, 56, 48, 56, 48, 56, 48, 56, 48, 56, 63, 248,
    63, 248, 48, 56, 48, 56, 48, 56, 48, 56, 48, 56, 48, 56, 48, 56, 48, 56, 63, 240,
    63, 240, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0,
    3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 63, 240, 63, 240, 15, 224, 15, 224, 0, 96,
    0, 96, 0, 96, 0, 96, 0, 96, 0, 96, 0, 96, 0, 96, 0, 96, 0, 96, 0, 96,
    0, 96, 64, 224, 112, 224, 127, 192, 31, 128, 48, 28, 48, 56, 48, 112, 48, 224, 49, 192,
    51, 128, 55, 0, 63, 0, 63, 0, 59, 128, 49, 128, 49, 192, 48, 224, 48, 96, 48, 112,
    48, 56, 48, 24, 48, 28, 24, 0, 24, 0, 24, 0, 24, 0, 24, 0, 24, 0, 24, 0,
    24, 0, 24, 0, 24, 0, 24, 0, 24, 0, 24, 0, 24, 0, 24, 0, 24, 0, 31, 248,
    31, 248, 112, 56, 120, 56, 120, 120, 120, 120, 108, 88, 108, 216, 100, 216, 102, 216, 102, 152,
    99, 152, 99, 152, 99, 24, 96, 24, 96, 24, 96, 24, 96, 24, 96, 24, 96, 24, 56, 24,
    56, 24, 60, 24, 60, 24, 60, 24, 54, 24, 54, 24, 51, 24, 51, 24, 51, 24, 49, 152,
    49, 152, 48, 216, 48, 248, 48, 248, 48, 120, 48, 120, 48, 56, 7, 192, 31, 224, 28, 112,
    56, 48, 48, 56, 48, 56, 48, 56, 112, 24, 112, 24, 112, 24, 112, 24, 48, 56, 48, 56,
    48, 56, 56, 48, 28, 112, 31, 224, 7, 192, 63, 192, 63, 240, 56, 120, 56, 56, 56, 24,
    56, 24, 56, 56, 56, 120, 63, 240, 63, 192, 56, 0, 56, 0, 56, 0, 56, 0, 56, 0,
    56, 0, 56, 0, 56, 0, 7, 192, 31, 224, 28, 112, 56, 48, 48, 56, 48, 56, 48, 56,
    112, 24, 112, 24, 112, 24, 112, 24, 48, 56, 48, 56, 48, 56, 56, 48, 28, 112, 31, 224,
    7, 192, 0, 224, 0, 112, 0, 32, 63, 192, 63, 224, 48, 112, 48, 48, 48, 48, 48, 48,
    48, 48, 48, 112, 63, 224, 63, 192, 48, 224, 48, 96, 48, 112, 48, 48, 48, 56, 48, 24,
    48, 28, 48, 12, 7, 192, 31, 240, 56, 48, 48, 0, 48, 0, 48, 0, 56, 0, 62, 0,
    31, 192, 7, 240, 0, 240, 0, 56, 0, 24, 0, 24, 0, 56, 32, 112, 63, 224, 15, 192,
    127, 252, 127, 252, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0,
    3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 48, 56, 48, 56,
    48, 56, 48, 56, 48, 56, 48, 56, 48, 56, 48, 56, 48, 56, 48, 56, 48, 56, 48, 56,
    48, 56, 48, 56, 48, 48, 56, 112, 31, 224, 7, 192, 96, 28, 112, 24, 112, 24, 48, 56,
    48, 48, 56, 48, 24, 48, 24, 112, 24, 96, 28, 96, 12, 96, 12, 224, 12, 192, 6, 192,
    6, 192, 7, 128, 7, 128, 3, 128, 192, 12, 192, 12, 224, 12, 96, 12, 96, 12, 99, 140,
    99, 156, 103, 152, 103, 152, 102, 152, 54, 216, 52, 216, 60, 216, 60, 112, 60, 112, 56, 112,
    56, 112, 24, 112, 112, 28, 48, 56, 24, 48, 28, 112, 12, 96, 14, 192, 7, 192, 7, 128,
    3, 128, 7, 128, 7, 192, 14, 192, 12, 96, 24, 112, 56, 48, 48, 56, 112, 24, 96, 28,
    96, 28, 112, 24, 48, 56, 56, 48, 24, 96, 12, 96, 12, 192, 7, 192, 7, 128, 3, 128,
    3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 63, 248, 63, 248,
    0, 56, 0, 48, 0, 112, 0, 96, 0, 192, 1, 192, 1, 128, 3, 0, 7, 0, 6, 0,
    14, 0, 28, 0, 24, 0, 56, 0, 63, 252, 63, 252, 7, 192, 7, 192, 7, 0, 7, 0,
    7, 0, 7, 0, 7, 0, 7, 0, 7, 0, 7, 0, 7, 0, 7, 0, 7, 0, 7, 0,
    7, 0, 7, 0, 7, 0, 7, 0, 7, 0, 7, 192, 7, 192, 112, 0, 48, 0, 56, 0,
    24, 0, 28, 0, 12, 0, 12, 0, 6, 0, 6, 0, 3, 0, 3, 0, 3, 128, 1, 128,
    1, 192, 0, 192, 0, 224, 0, 96, 0, 96, 0, 48, 0, 48, 15, 128, 15, 128, 1, 128,
    1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128,
    1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 15, 128, 15, 128, 3, 128, 7, 128,
    14, 192, 12, 224, 24, 112, 48, 48, 96, 24, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    255, 252, 255, 252, 12, 0, 6, 0, 3, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 15, 192, 31, 224, 16, 112, 0, 48, 0, 48, 15, 240, 31, 240, 56, 48, 48, 48,
    48, 48, 56, 240, 63, 240, 15, 48, 48, 0, 48, 0, 48, 0, 48, 0, 48, 0, 51, 192,
    63, 224, 60, 112, 56, 56, 56, 24, 48, 24, 48, 24, 48, 24, 56, 24, 56, 56, 60, 112,
    63, 224, 51, 192, 3, 224, 15, 240, 30, 16, 24, 0, 24, 0, 56, 0, 56, 0, 56, 0,
    24, 0, 24, 0, 30, 16, 15, 240, 3, 224, 0, 48, 0, 48, 0, 48, 0, 48, 0, 48,
    15, 48, 31, 240, 56, 112, 48, 112, 48, 48, 112, 48, 112, 48, 112, 48, 48, 48, 48, 112,
    56, 112, 31, 240, 15, 48, 7, 192, 31, 224, 28, 112, 48, 56, 48, 24, 63, 248, 127, 248,
    48, 0, 48, 0, 48, 0, 28, 16, 31, 248, 7, 224, 0, 240, 3, 240, 3, 0, 3, 0,
    3, 0, 63, 240, 63, 240, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0,
    3, 0, 3, 0, 3, 0, 3, 0, 15, 48, 31, 240, 56, 112, 48, 112, 48, 48, 112, 48,
    112, 48, 112, 48, 48, 48, 48, 112, 56, 112, 31, 240, 15, 48, 0, 48, 0, 48, 16, 96,
    31, 224, 15, 128, 48, 0, 48, 0, 48, 0, 48, 0, 48, 0, 51, 192, 63, 224, 60, 112,
    56, 48, 56, 48, 48, 48, 48, 48, 48, 48, 48, 48, 48, 48, 48, 48, 48, 48, 48, 48,
    3, 128, 3, 128, 3, 128, 0, 0, 0, 0, 31, 128, 31, 128, 3, 128, 3, 128, 3, 128,
    3, 128, 3, 128, 3, 128, 3, 128, 3, 128, 3, 128, 63, 248, 63, 248, 1, 128, 1, 128,
    1, 128, 0, 0, 0, 0, 31, 128, 31, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128,
    1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 3, 128, 63, 0,
    62, 0, 24, 0, 24, 0, 24, 0, 24, 0, 24, 0, 24, 56, 24, 112, 24, 224, 25, 192,
    27, 128, 31, 128, 31, 128, 25, 192, 24, 224, 24, 112, 24, 48, 24, 56, 24, 28, 62, 0,
    62, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6, 0,
    6, 0, 6, 0, 7, 0, 7, 0, 3, 0, 3, 240, 1, 240, 110, 112, 127, 248, 115, 152,
    99, 24, 99, 24, 99, 24, 99, 24, 99, 24, 99, 24, 99, 24, 99, 24, 99, 24, 99, 24,
    51, 192, 63, 224, 60, 112, 56, 48, 56, 48, 48, 48, 48, 48, 48, 48, 48, 48, 48, 48,
    48, 48, 48, 48, 48, 48, 7, 192, 31, 224, 24, 112, 56, 48, 48, 56, 48, 56, 48, 24,
    48, 56, 48, 56, 56, 48, 56, 112, 31, 224, 7, 192, 51, 192, 63, 224, 60, 112, 56, 56,
    56, 56, 48, 24, 48, 24, 48, 24, 56, 56, 56, 56, 60, 112, 63, 224, 51, 192, 48, 0,
    48, 0, 48, 0, 48, 0, 48, 0, 7, 176, 31, 240, 56, 112, 48, 48, 48, 48, 48, 48,
    48, 48, 48, 48, 48, 48, 48, 48, 56, 112, 31, 240, 7, 176, 0, 48, 0, 48, 0, 48,
    0, 48, 0, 48, 12, 120, 13, 252, 15, 0, 14, 0, 14, 0, 14, 0, 12, 0, 12, 0,
    12, 0, 12, 0, 12, 0, 12, 0, 12, 0, 7, 192, 31, 224, 24, 32, 24, 0, 24, 0,
    30, 0, 15, 224, 0, 240, 0, 48, 0, 48, 16, 112, 63, 224, 15, 192, 6, 0, 6, 0,
    6, 0, 6, 0, 63, 240, 63, 240, 6, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6, 0,
    6, 0, 6, 0, 7, 0, 3, 240, 1, 240, 48, 48, 48, 48, 48, 48, 48, 48, 48, 48,
    48, 48, 48, 48, 48, 48, 56, 48, 56, 48, 24, 112, 31, 240, 15, 48, 112, 24, 48, 24,
    48, 48, 56, 48, 24, 112, 24, 96, 12, 96, 12, 224, 12, 192, 6, 192, 7, 192, 7, 128,
    3, 128, 192, 12, 192, 12, 96, 12, 96, 12, 99, 24, 99, 152, 51, 152, 54, 152, 52, 176,
    52, 240, 60, 112, 28, 112, 24, 96, 48, 56, 56, 48, 28, 96, 12, 192, 7, 192, 3, 128,
    3, 128, 7, 128, 14, 192, 12, 224, 24, 112, 48, 48, 112, 24, 112, 24, 48, 24, 48, 56,
    24, 48, 24, 48, 28, 96, 12, 96, 12, 224, 6, 192, 6, 192, 7, 128, 3, 128, 3, 128,
    3, 0, 3, 0, 6, 0, 62, 0, 60, 0, 31, 240, 31, 240, 0, 48, 0, 96, 0, 192,
    1, 128, 3, 0, 7, 0, 6, 0, 12, 0, 24, 0, 63, 240, 63, 240, 0, 240, 1, 240,
    3, 128, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 7, 0, 30, 0, 30, 0,
    7, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 128, 1, 240, 0, 240,
    3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0,
    3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0, 3, 0,
    3, 0, 3, 0, 3, 0, 3, 0, 30, 0, 31, 0, 7, 0, 3, 0, 3, 0, 3, 0,
    3, 0, 3, 0, 3, 0, 3, 128, 1, 240, 1, 240, 3, 128, 3, 0, 3, 0, 3, 0,
    3, 0, 3, 0, 3, 0, 7, 0, 31, 0, 30, 0, 63, 8, 127, 248, 65, 240, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
};

inline constexpr Glyph k_microsoft_yahei_glyphs[] = {
    {8, 0, 0, 0, 0, 0u},
    {10, 10, 18, 0, 5, 0u},
    {11, 11, 18, 0, 5, 36u},
    {20, 20, 18, 0, 5, 72u},
    {15, 15, 22, 0, 5, 126u},
    {23, 23, 18, 0, 5, 170u},
    {19, 19, 18, 0, 5, 224u},
    {7, 7, 18, 0, 5, 278u},
    {9, 9, 21, 0, 5, 296u},
    {9, 9, 21, 0, 5, 338u},
    {12, 12, 18, 0, 5, 380u},
    {20, 20, 16, 0, 7, 416u},
    {8, 8, 6, 0, 20, 464u},
    {9, 9, 8, 0, 15, 470u},
    {8, 8, 3, 0, 20, 486u},
    {8, 9, 20, 0, 5, 489u},
    {15, 15, 18, 0, 5, 529u},
    {15, 15, 18, 0, 5, 565u},
    {15, 15, 18, 0, 5, 601u},
    {15, 15, 18, 0, 5, 637u},
    {15, 15, 18, 0, 5, 673u},
    {15, 15, 18, 0, 5, 709u},
    {15, 15, 18, 0, 5, 745u},
    {15, 15, 18, 0, 5, 781u},
    {15, 15, 18, 0, 5, 817u},
    {15, 15, 18, 0, 5, 853u},
    {8, 8, 12, 0, 11, 889u},
    {8, 8, 15, 0, 11, 901u},
    {20, 20, 14, 0, 9, 916u},
    {20, 20, 11, 0, 12, 958u},
    {20, 20, 14, 0, 9, 991u},
    {13, 13, 18, 0, 5, 1033u},
    {24, 24, 21, 0, 6, 1069u},
    {16, 17, 18, 0, 5, 1132u},
    {16, 16, 18, 0, 5, 1186u},
    {17, 17, 18, 0, 5, 1222u},
    {18, 18, 18, 0, 5, 1276u},
    {15, 15, 18, 0, 5, 1330u},
    {14, 14, 18, 0, 5, 1366u},
    {19, 19, 18, 0, 5, 1402u},
    {18, 18, 18, 0, 5, 1456u},
    {7, 7, 18, 0, 5, 1510u},
    {7, 9, 23, -2, 5, 1528u},
    {16, 17, 18, 0, 5, 1574u},
    {13, 14, 18, 0, 5, 1628u},
    {21, 21, 18, 0, 5, 1664u},
    {18, 18, 18, 0, 5, 1718u},
    {19, 19, 18, 0, 5, 1772u},
    {14, 14, 18, 0, 5, 1826u},
    {19, 19, 21, 0, 5, 1862u},
    {17, 17, 18, 0, 5, 1925u},
    {15, 15, 18, 0, 5, 1979u},
    {15, 16, 18, -1, 5, 2015u},
    {18, 18, 18, 0, 5, 2051u},
    {16, 17, 18, 0, 5, 2105u},
    {24, 24, 18, 0, 5, 2159u},
    {16, 16, 18, 0, 5, 2213u},
    {15, 16, 18, -1, 5, 2249u},
    {16, 16, 18, 0, 5, 2285u},
    {9, 9, 21, 0, 5, 2321u},
    {8, 9, 20, 0, 5, 2363u},
    {9, 9, 21, 0, 5, 2403u},
    {20, 20, 18, 0, 5, 2445u},
    {12, 14, 6, -1, 23, 2499u},
    {12, 12, 19, 0, 4, 2511u},
    {15, 15, 13, 0, 10, 2549u},
    {15, 15, 18, 0, 5, 2575u},
    {13, 13, 13, 0, 10, 2611u},
    {15, 15, 18, 0, 5, 2637u},
    {15, 15, 13, 0, 10, 2673u},
    {8, 9, 18, 0, 5, 2699u},
    {15, 15, 18, 0, 10, 2735u},
    {15, 15, 18, 0, 5, 2771u},
    {7, 7, 18, 0, 5, 2807u},
    {7, 8, 23, -1, 5, 2825u},
    {14, 14, 18, 0, 5, 2848u},
    {7, 7, 18, 0, 5, 2884u},
    {23, 23, 13, 0, 10, 2902u},
    {15, 15, 13, 0, 10, 2941u},
    {15, 15, 13, 0, 10, 2967u},
    {15, 15, 18, 0, 10, 2993u},
    {15, 15, 18, 0, 10, 3029u},
    {10, 10, 13, 0, 10, 3065u},
    {12, 13, 13, 0, 10, 3091u},
    {9, 9, 17, 0, 6, 3117u},
    {15, 15, 13, 0, 10, 3151u},
    {14, 14, 13, 0, 10, 3177u},
    {20, 20, 13, 0, 10, 3203u},
    {14, 14, 13, 0, 10, 3242u},
    {14, 14, 18, 0, 10, 3268u},
    {13, 13, 13, 0, 10, 3304u},
    {15, 15, 22, 0, 5, 3330u},
    {8, 8, 24, 0, 5, 3374u},
    {15, 15, 22, 0, 5, 3398u},
    {20, 20, 10, 0, 13, 3442u},
};

inline constexpr uint8_t k_microsoft_yahei_bitmap[] = {
    12, 0, 12, 0, 12, 0, 12, 0, 12, 0, 12, 0, 12, 0, 12, 0, 12, 0, 12, 0,
    12, 0, 12, 0, 0, 0, 0, 0, 0, 0, 12, 0, 12, 0, 12, 0, 49, 128, 49, 128,
    49, 128, 49, 128, 49, 128, 49, 128, 49, 128, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 195, 0, 0, 194, 0, 0, 198,
    0, 0, 198, 0, 0, 134, 0, 31, 255, 192, 31, 255, 192, 1, 140, 0, 1, 12, 0, 3,
    12, 0, 3, 24, 0, 63, 255, 128, 63, 255, 128, 6, 24, 0, 6, 48, 0, 6, 48, 0,
    6, 48, 0, 12, 48, 0, 1, 0, 1, 0, 1, 0, 7, 224, 31, 240, 57, 16, 49, 0,
    49, 0, 57, 0, 31, 0, 15, 224, 1, 240, 1, 56, 1, 24, 1, 24, 49, 56, 63, 240,
    15, 224, 1, 0, 1, 0, 1, 0, 1, 0, 30, 0, 192, 51, 1, 128, 49, 131, 0, 97,
    131, 0, 97, 134, 0, 97, 132, 0, 97, 140, 0, 49, 152, 0, 51, 24, 224, 30, 51, 16,
    0, 35, 24, 0, 98, 24, 0, 198, 8, 0, 198, 8, 1, 130, 24, 1, 3, 24, 3, 3,
    16, 6, 0, 224, 3, 224, 0, 7, 240, 0, 14, 16, 0, 12, 0, 0, 12, 0, 0, 12,
    0, 0, 14, 0, 0, 14, 0, 0, 15, 0, 0, 27, 193, 128, 48, 225, 128, 48, 115, 0,
    48, 59, 0, 48, 30, 0, 56, 14, 0, 60, 31, 0, 31, 243, 128, 7, 225, 192, 48, 48,
    48, 48, 48, 48, 48, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 6, 0, 6, 0,
    12, 0, 12, 0, 24, 0, 24, 0, 24, 0, 56, 0, 48, 0, 48, 0, 48, 0, 48, 0,
    48, 0, 56, 0, 24, 0, 24, 0, 24, 0, 12, 0, 12, 0, 6, 0, 6, 0, 48, 0,
    24, 0, 24, 0, 12, 0, 12, 0, 12, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6, 0,
    6, 0, 6, 0, 6, 0, 6, 0, 12, 0, 12, 0, 12, 0, 24, 0, 24, 0, 48, 0,
    6, 0, 6, 0, 70, 32, 54, 192, 15, 0, 15, 0, 54, 192, 70, 32, 6, 0, 6, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 96, 0, 0,
    96, 0, 0, 96, 0, 0, 96, 0, 0, 96, 0, 0, 96, 0, 0, 96, 0, 31, 255, 192,
    31, 255, 192, 0, 96, 0, 0, 96, 0, 0, 96, 0, 0, 96, 0, 0, 96, 0, 0, 96,
    0, 0, 96, 0, 24, 24, 24, 56, 48, 48, 126, 0, 126, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 24, 24, 24, 3, 0, 3, 0, 6, 0, 6, 0, 6, 0, 12,
    0, 12, 0, 12, 0, 28, 0, 24, 0, 24, 0, 24, 0, 48, 0, 48, 0, 48, 0, 96,
    0, 96, 0, 96, 0, 192, 0, 192, 0, 7, 192, 15, 224, 28, 112, 24, 56, 56, 24, 48,
    24, 48, 28, 48, 28, 48, 28, 48, 28, 48, 28, 48, 28, 48, 24, 56, 24, 24, 56, 28,
    112, 15, 224, 7, 192, 7, 128, 31, 128, 25, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1,
    128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 31, 248, 31,
    248, 15, 192, 63, 224, 48, 112, 0, 56, 0, 56, 0, 56, 0, 56, 0, 48, 0, 112, 0,
    224, 1, 192, 3, 128, 7, 0, 14, 0, 28, 0, 56, 0, 63, 248, 63, 248, 15, 192, 63,
    240, 48, 112, 0, 56, 0, 56, 0, 56, 0, 56, 0, 112, 7, 224, 7, 224, 0, 112, 0,
    24, 0, 24, 0, 24, 0, 24, 32, 120, 63, 240, 31, 192, 0, 224, 0, 224, 1, 224, 3,
    96, 3, 96, 6, 96, 12, 96, 12, 96, 24, 96, 56, 96, 48, 96, 96, 96, 127, 252, 127,
    252, 0, 96, 0, 96, 0, 96, 0, 96, 31, 240, 31, 240, 24, 0, 24, 0, 24, 0, 24,
    0, 31, 192, 31, 224, 16, 112, 0, 56, 0, 24, 0, 24, 0, 24, 0, 24, 0, 56, 32,
    112, 63, 224, 31, 192, 3, 224, 7, 248, 14, 24, 28, 0, 56, 0, 48, 0, 51, 224, 55,
    240, 60, 56, 56, 24, 56, 28, 56, 28, 56, 28, 56, 28, 24, 24, 28, 56, 15, 240, 7,
    192, 63, 248, 63, 248, 0, 56, 0, 48, 0, 112, 0, 112, 0, 96, 0, 224, 0, 192, 0,
    192, 1, 192, 1, 128, 3, 128, 3, 128, 3, 0, 7, 0, 6, 0, 6, 0, 7, 192, 31,
    240, 28, 56, 56, 56, 48, 24, 48, 24, 56, 56, 28, 48, 15, 224, 15, 224, 28, 56, 48,
    24, 48, 28, 48, 28, 48, 24, 60, 56, 31, 240, 7, 224, 7, 192, 31, 224, 60, 112, 56,
    56, 48, 24, 48, 24, 48, 24, 48, 28, 56, 60, 60, 124, 31, 248, 7, 152, 0, 24, 0,
    56, 0, 48, 16, 240, 31, 224, 15, 128, 24, 24, 24, 0, 0, 0, 0, 0, 0, 24, 24,
    24, 24, 24, 24, 0, 0, 0, 0, 0, 0, 24, 24, 24, 56, 48, 48, 0, 0, 192, 0,
    7, 192, 0, 31, 128, 0, 252, 0, 7, 224, 0, 31, 0, 0, 28, 0, 0, 31, 0, 0,
    7, 224, 0, 0, 252, 0, 0, 31, 128, 0, 7, 192, 0, 0, 192, 0, 0, 0, 31, 255,
    192, 31, 255, 192, 0, 0, 0, 0, 0, 0, 0, 0, 0, 31, 255, 192, 31, 255, 192, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 16, 0, 0, 30, 0, 0, 31, 128, 0,
    3, 240, 0, 0, 126, 0, 0, 15, 128, 0, 3, 192, 0, 15, 128, 0, 126, 0, 3, 240,
    0, 15, 128, 0, 30, 0, 0, 16, 0, 0, 0, 0, 0, 15, 128, 63, 192, 48, 224, 0,
    224, 0, 96, 0, 224, 0, 192, 1, 128, 3, 0, 6, 0, 6, 0, 6, 0, 6, 0, 0,
    0, 0, 0, 6, 0, 6, 0, 6, 0, 0, 127, 0, 1, 255, 192, 7, 129, 224, 14, 0,
    112, 28, 0, 24, 24, 61, 152, 48, 255, 140, 48, 195, 140, 33, 129, 132, 33, 129, 132, 33,
    129, 140, 33, 129, 140, 33, 129, 140, 48, 195, 184, 48, 255, 240, 24, 61, 192, 28, 0, 0,
    14, 0, 64, 7, 129, 192, 1, 255, 128, 0, 126, 0, 1, 192, 0, 3, 192, 0, 3, 192,
    0, 3, 96, 0, 7, 96, 0, 6, 112, 0, 14, 48, 0, 14, 48, 0, 12, 56, 0, 28,
    24, 0, 28, 24, 0, 24, 28, 0, 63, 252, 0, 63, 254, 0, 112, 14, 0, 112, 6, 0,
    96, 7, 0, 224, 3, 0, 63, 224, 63, 248, 56, 60, 56, 28, 56, 12, 56, 12, 56, 28,
    56, 56, 63, 240, 63, 248, 56, 28, 56, 12, 56, 14, 56, 14, 56, 14, 56, 28, 63, 248,
    63, 240, 1, 248, 0, 7, 254, 0, 14, 6, 0, 28, 0, 0, 56, 0, 0, 48, 0, 0,
    48, 0, 0, 112, 0, 0, 112, 0, 0, 112, 0, 0, 112, 0, 0, 48, 0, 0, 48, 0,
    0, 56, 0, 0, 28, 0, 0, 14, 6, 0, 7, 254, 0, 1, 248, 0, 63, 224, 0, 63,
    252, 0, 56, 30, 0, 56, 7, 0, 56, 7, 0, 56, 3, 128, 56, 3, 128, 56, 3, 128,
    56, 1, 128, 56, 1, 128, 56, 3, 128, 56, 3, 128, 56, 3, 128, 56, 7, 0, 56, 7,
    0, 56, 30, 0, 63, 252, 0, 63, 224, 0, 63, 248, 63, 248, 56, 0, 56, 0, 56, 0,
    56, 0, 56, 0, 56, 0, 63, 248, 63, 248, 56, 0, 56, 0, 56, 0, 56, 0, 56, 0,
    56, 0, 63, 252, 63, 252, 63, 240, 63, 240, 56, 0, 56, 0, 56, 0, 56, 0, 56, 0,
    56, 0, 63, 240, 63, 240, 56, 0, 56, 0, 56, 0, 56, 0, 56, 0, 56, 0, 56, 0,
    56, 0, 1, 248, 0, 7, 254, 0, 14, 7, 0, 28, 1, 0, 56, 0, 0, 48, 0, 0,
    48, 0, 0, 112, 0, 0, 112, 63, 128, 112, 63, 128, 112, 3, 128, 48, 3, 128, 48, 3,
    128, 56, 3, 128, 28, 3, 128, 14, 7, 128, 7, 255, 0, 1, 248, 0, 56, 7, 0, 56,
    7, 0, 56, 7, 0, 56, 7, 0, 56, 7, 0, 56, 7, 0, 56, 7, 0, 56, 7, 0,
    63, 255, 0, 63, 255, 0, 56, 7, 0, 56, 7, 0, 56, 7, 0, 56, 7, 0, 56, 7,
    0, 56, 7, 0, 56, 7, 0, 56, 7, 0, 56, 56, 56, 56, 56, 56, 56, 56, 56, 56,
    56, 56, 56, 56, 56, 56, 56, 56, 14, 0, 14, 0, 14, 0, 14, 0, 14, 0, 14, 0,
    14, 0, 14, 0, 14, 0, 14, 0, 14, 0, 14, 0, 14, 0, 14, 0, 14, 0, 14, 0,
    14, 0, 14, 0, 14, 0, 12, 0, 28, 0, 120, 0, 112, 0, 56, 14, 0, 56, 28, 0,
    56, 56, 0, 56, 112, 0, 56, 224, 0, 57, 192, 0, 59, 128, 0, 63, 0, 0, 62, 0,
    0, 63, 0, 0, 59, 128, 0, 57, 192, 0, 56, 224, 0, 56, 112, 0, 56, 56, 0, 56,
    28, 0, 56, 14, 0, 56, 7, 0, 56, 0, 56, 0, 56, 0, 56, 0, 56, 0, 56, 0,
    56, 0, 56, 0, 56, 0, 56, 0, 56, 0, 56, 0, 56, 0, 56, 0, 56, 0, 56, 0,
    63, 248, 63, 248, 60, 1, 192, 60, 3, 192, 62, 3, 192, 62, 3, 192, 62, 6, 192, 59,
    6, 192, 59, 6, 192, 57, 140, 192, 57, 140, 192, 57, 152, 192, 56, 216, 192, 56, 216, 192,
    56, 240, 192, 56, 112, 192, 56, 112, 192, 56, 0, 192, 56, 0, 192, 56, 0, 192, 60, 7,
    0, 60, 7, 0, 62, 7, 0, 62, 7, 0, 63, 7, 0, 59, 7, 0, 59, 135, 0, 57,
    135, 0, 56, 199, 0, 56, 199, 0, 56, 103, 0, 56, 103, 0, 56, 55, 0, 56, 55, 0,
    56, 31, 0, 56, 31, 0, 56, 15, 0, 56, 15, 0, 1, 240, 0, 7, 252, 0, 14, 14,
    0, 28, 7, 0, 56, 3, 128, 48, 3, 128, 48, 1, 128, 112, 1, 128, 112, 1, 192, 112,
    1, 192, 112, 1, 128, 48, 1, 128, 48, 3, 128, 56, 3, 128, 28, 7, 0, 14, 14, 0,
    7, 252, 0, 1, 240, 0, 63, 224, 63, 240, 56, 56, 56, 24, 56, 28, 56, 28, 56, 24,
    56, 56, 63, 240, 63, 224, 56, 0, 56, 0, 56, 0, 56, 0, 56, 0, 56, 0, 56, 0,
    56, 0, 1, 240, 0, 7, 252, 0, 14, 14, 0, 28, 7, 0, 56, 3, 128, 48, 3, 128,
    48, 1, 128, 112, 1, 128, 112, 1, 192, 112, 1, 192, 112, 1, 128, 48, 1, 128, 48, 3,
    128, 56, 3, 128, 28, 7, 0, 14, 14, 0, 7, 252, 0, 1, 248, 0, 0, 28, 0, 0,
    14, 0, 0, 6, 0, 63, 224, 0, 63, 240, 0, 56, 56, 0, 56, 24, 0, 56, 28, 0,
    56, 28, 0, 56, 24, 0, 56, 56, 0, 63, 240, 0, 63, 224, 0, 56, 112, 0, 56, 56,
    0, 56, 24, 0, 56, 28, 0, 56, 12, 0, 56, 14, 0, 56, 6, 0, 56, 7, 0, 7,
    224, 31, 248, 60, 24, 48, 0, 48, 0, 48, 0, 56, 0, 62, 0, 31, 224, 7, 240, 0,
    120, 0, 28, 0, 28, 0, 28, 0, 28, 48, 56, 63, 240, 15, 224, 127, 255, 127, 255, 1,
    192, 1, 192, 1, 192, 1, 192, 1, 192, 1, 192, 1, 192, 1, 192, 1, 192, 1, 192, 1,
    192, 1, 192, 1, 192, 1, 192, 1, 192, 1, 192, 48, 6, 0, 48, 6, 0, 48, 6, 0,
    48, 6, 0, 48, 6, 0, 48, 6, 0, 48, 6, 0, 48, 6, 0, 48, 6, 0, 48, 6,
    0, 48, 6, 0, 56, 6, 0, 56, 6, 0, 56, 6, 0, 24, 14, 0, 28, 28, 0, 15,
    248, 0, 3, 240, 0, 224, 3, 0, 96, 7, 0, 112, 6, 0, 112, 14, 0, 48, 14, 0,
    56, 12, 0, 24, 28, 0, 24, 24, 0, 28, 24, 0, 12, 56, 0, 12, 48, 0, 14, 48,
    0, 6, 112, 0, 7, 96, 0, 3, 224, 0, 3, 192, 0, 3, 192, 0, 1, 192, 0, 96,
    56, 14, 112, 60, 14, 112, 60, 12, 48, 60, 12, 48, 108, 28, 56, 102, 28, 56, 102, 24,
    24, 102, 24, 24, 198, 56, 24, 194, 56, 28, 195, 48, 12, 195, 48, 12, 131, 48, 13, 129,
    112, 15, 129, 224, 7, 129, 224, 7, 129, 224, 7, 1, 224, 48, 14, 56, 12, 28, 28, 12,
    56, 14, 48, 7, 112, 3, 224, 3, 192, 1, 192, 3, 192, 3, 224, 7, 96, 14, 48, 12,
    56, 28, 24, 56, 12, 48, 14, 112, 6, 112, 6, 48, 14, 24, 12, 28, 24, 12, 56, 6,
    48, 7, 96, 3, 224, 1, 192, 1, 192, 1, 192, 1, 192, 1, 192, 1, 192, 1, 192, 1,
    192, 1, 192, 1, 192, 127, 254, 127, 254, 0, 14, 0, 28, 0, 56, 0, 112, 0, 96, 0,
    224, 1, 192, 3, 128, 7, 0, 7, 0, 14, 0, 28, 0, 56, 0, 48, 0, 127, 254, 127,
    254, 62, 0, 62, 0, 48, 0, 48, 0, 48, 0, 48, 0, 48, 0, 48, 0, 48, 0, 48,
    0, 48, 0, 48, 0, 48, 0, 48, 0, 48, 0, 48, 0, 48, 0, 48, 0, 48, 0, 62,
    0, 62, 0, 192, 0, 192, 0, 96, 0, 96, 0, 96, 0, 48, 0, 48, 0, 48, 0, 24,
    0, 24, 0, 24, 0, 28, 0, 12, 0, 12, 0, 12, 0, 6, 0, 6, 0, 6, 0, 3,
    0, 3, 0, 62, 0, 62, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6,
    0, 6, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6,
    0, 62, 0, 62, 0, 0, 240, 0, 0, 248, 0, 1, 216, 0, 3, 140, 0, 7, 6, 0,
    12, 3, 0, 24, 1, 128, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 127, 248, 127, 248, 56, 0, 28, 0, 12, 0, 6, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 15, 192, 63, 224, 48, 112, 0, 48, 0, 48, 15,
    248, 63, 248, 56, 56, 48, 56, 112, 56, 48, 248, 63, 248, 31, 56, 48, 0, 48, 0, 48,
    0, 48, 0, 48, 0, 51, 224, 63, 240, 60, 56, 56, 24, 56, 28, 48, 12, 48, 12, 48,
    12, 56, 28, 56, 24, 60, 56, 63, 240, 51, 224, 7, 192, 31, 240, 60, 48, 56, 0, 48,
    0, 112, 0, 112, 0, 112, 0, 48, 0, 56, 0, 60, 48, 31, 240, 7, 192, 0, 24, 0,
    24, 0, 24, 0, 24, 0, 24, 7, 152, 31, 248, 56, 120, 48, 56, 48, 24, 112, 24, 112,
    24, 112, 24, 48, 24, 48, 56, 56, 120, 31, 248, 15, 152, 7, 192, 31, 240, 28, 56, 48,
    24, 48, 24, 127, 248, 127, 248, 112, 0, 48, 0, 48, 0, 28, 24, 31, 248, 7, 224, 15,
    128, 31, 128, 24, 0, 24, 0, 24, 0, 127, 0, 127, 0, 24, 0, 24, 0, 24, 0, 24,
    0, 24, 0, 24, 0, 24, 0, 24, 0, 24, 0, 24, 0, 24, 0, 15, 152, 31, 248, 56,
    120, 48, 56, 48, 24, 112, 24, 112, 24, 112, 24, 48, 24, 48, 56, 56, 120, 31, 248, 15,
    152, 0, 24, 0, 56, 16, 112, 31, 224, 15, 192, 48, 0, 48, 0, 48, 0, 48, 0, 48,
    0, 51, 224, 63, 240, 60, 56, 56, 24, 56, 24, 48, 24, 48, 24, 48, 24, 48, 24, 48,
    24, 48, 24, 48, 24, 48, 24, 48, 48, 48, 0, 0, 48, 48, 48, 48, 48, 48, 48, 48,
    48, 48, 48, 48, 48, 24, 24, 24, 0, 0, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24,
    24, 24, 24, 24, 24, 24, 120, 112, 48, 0, 48, 0, 48, 0, 48, 0, 48, 0, 48, 56,
    48, 112, 48, 224, 49, 192, 51, 0, 62, 0, 62, 0, 55, 0, 51, 128, 49, 192, 48, 224,
    48, 112, 48, 56, 48, 48, 48, 48, 48, 48, 48, 48, 48, 48, 48, 48, 48, 48, 48, 48,
    48, 48, 51, 225, 224, 63, 247, 240, 60, 62, 56, 56, 56, 24, 56, 24, 24, 48, 24, 24,
    48, 24, 24, 48, 24, 24, 48, 24, 24, 48, 24, 24, 48, 24, 24, 48, 24, 24, 48, 24,
    24, 51, 224, 63, 240, 60, 56, 56, 24, 56, 24, 48, 24, 48, 24, 48, 24, 48, 24, 48,
    24, 48, 24, 48, 24, 48, 24, 7, 192, 31, 224, 56, 112, 48, 56, 48, 24, 112, 24, 112,
    24, 112, 24, 48, 24, 48, 56, 56, 112, 31, 224, 7, 192, 51, 224, 63, 240, 60, 56, 56,
    24, 56, 28, 48, 12, 48, 12, 48, 12, 56, 28, 56, 24, 60, 56, 63, 240, 51, 224, 48,
    0, 48, 0, 48, 0, 48, 0, 48, 0, 7, 152, 31, 248, 56, 120, 48, 56, 48, 24, 112,
    24, 112, 24, 112, 24, 48, 24, 48, 56, 56, 120, 31, 248, 15, 152, 0, 24, 0, 24, 0,
    24, 0, 24, 0, 24, 51, 192, 63, 192, 60, 0, 56, 0, 56, 0, 48, 0, 48, 0, 48,
    0, 48, 0, 48, 0, 48, 0, 48, 0, 48, 0, 15, 128, 63, 224, 48, 96, 112, 0, 48,
    0, 60, 0, 31, 128, 1, 224, 0, 96, 0, 96, 96, 224, 127, 192, 31, 128, 48, 0, 48,
    0, 48, 0, 48, 0, 127, 128, 127, 128, 48, 0, 48, 0, 48, 0, 48, 0, 48, 0, 48,
    0, 48, 0, 48, 0, 56, 0, 31, 128, 15, 128, 48, 24, 48, 24, 48, 24, 48, 24, 48,
    24, 48, 24, 48, 24, 48, 24, 48, 24, 56, 56, 24, 120, 31, 248, 15, 152, 96, 24, 112,
    24, 48, 56, 48, 48, 56, 48, 24, 96, 24, 96, 12, 224, 12, 192, 14, 192, 7, 192, 7,
    128, 7, 128, 96, 224, 192, 112, 224, 192, 48, 240, 192, 48, 240, 192, 49, 177, 128, 57, 153,
    128, 25, 153, 128, 25, 27, 128, 27, 27, 0, 15, 15, 0, 15, 15, 0, 14, 15, 0, 14,
    6, 0, 112, 56, 56, 112, 28, 96, 12, 224, 7, 192, 7, 128, 3, 128, 7, 128, 14, 192,
    28, 224, 24, 112, 48, 48, 112, 56, 96, 24, 112, 24, 48, 48, 48, 48, 24, 112, 24, 96,
    28, 96, 12, 192, 12, 192, 7, 192, 7, 128, 3, 128, 3, 0, 3, 0, 7, 0, 6, 0,
    62, 0, 60, 0, 127, 240, 127, 240, 0, 96, 0, 192, 1, 128, 3, 0, 6, 0, 14, 0,
    28, 0, 56, 0, 48, 0, 127, 240, 127, 240, 0, 240, 1, 240, 1, 128, 1, 128, 1, 128,
    1, 128, 1, 128, 1, 128, 3, 128, 3, 0, 31, 0, 31, 0, 3, 0, 3, 128, 1, 128,
    1, 128, 1, 128, 1, 128, 1, 128, 1, 128, 1, 240, 0, 240, 24, 24, 24, 24, 24, 24,
    24, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24, 24, 30, 0,
    31, 0, 3, 0, 3, 128, 3, 128, 3, 128, 3, 128, 3, 128, 1, 128, 1, 128, 0, 240,
    0, 240, 1, 192, 1, 128, 3, 128, 3, 128, 3, 128, 3, 128, 3, 128, 3, 0, 31, 0,
    30, 0, 0, 0, 0, 7, 128, 64, 31, 225, 192, 24, 127, 128, 0, 30, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
};

inline constexpr Glyph k_simhei_glyphs[] = {
    {8, 0, 0, 0, 0, 0u},
    {11, 11, 18, 0, 5, 0u},
    {12, 13, 18, 0, 5, 36u},
    {20, 20, 18, 0, 5, 72u},
    {17, 17, 23, 0, 4, 126u},
    {24, 24, 18, 0, 5, 195u},
    {21, 21, 18, 0, 5, 249u},
    {7, 7, 18, 0, 5, 303u},
    {11, 11, 21, 0, 5, 321u},
    {11, 11, 21, 0, 5, 363u},
    {13, 13, 18, 0, 5, 405u},
    {20, 20, 15, 0, 8, 441u},
    {9, 9, 8, 0, 18, 486u},
    {10, 10, 9, 0, 14, 502u},
    {9, 9, 5, 0, 18, 520u},
    {9, 9, 20, 0, 5, 530u},
    {17, 17, 18, 0, 5, 570u},
    {17, 17, 18, 0, 5, 624u},
    {17, 17, 18, 0, 5, 678u},
    {17, 17, 18, 0, 5, 732u},
    {17, 17, 18, 0, 5, 786u},
    {17, 17, 18, 0, 5, 840u},
    {17, 17, 18, 0, 5, 894u},
    {17, 17, 18, 0, 5, 948u},
    {17, 17, 18, 0, 5, 1002u},
    {17, 17, 18, 0, 5, 1056u},
    {10, 10, 13, 0, 10, 1110u},
    {10, 10, 16, 0, 10, 1136u},
    {20, 20, 14, 0, 9, 1168u},
    {20, 20, 12, 0, 11, 1210u},
    {20, 20, 14, 0, 9, 1246u},
    {14, 14, 18, 0, 5, 1288u},
    {24, 24, 21, 0, 5, 1324u},
    {19, 19, 18, 0, 5, 1387u},
    {18, 18, 18, 0, 5, 1441u},
    {18, 18, 18, 0, 5, 1495u},
    {20, 20, 18, 0, 5, 1549u},
    {16, 16, 18, 0, 5, 1603u},
    {16, 16, 18, 0, 5, 1639u},
    {20, 20, 18, 0, 5, 1675u},
    {20, 20, 18, 0, 5, 1729u},
    {9, 9, 18, 0, 5, 1783u},
    {9, 11, 23, -2, 5, 1819u},
    {19, 20, 18, 0, 5, 1865u},
    {15, 15, 18, 0, 5, 1919u},
    {24, 24, 18, 0, 5, 1955u},
    {20, 20, 18, 0, 5, 2009u},
    {20, 20, 18, 0, 5, 2063u},
    {18, 18, 18, 0, 5, 2117u},
    {20, 20, 22, 0, 5, 2171u},
    {18, 18, 18, 0, 5, 2237u},
    {17, 17, 18, 0, 5, 2291u},
    {16, 17, 18, 0, 5, 2345u},
    {19, 19, 18, 0, 5, 2399u},
    {19, 19, 18, 0, 5, 2453u},
    {26, 26, 18, 0, 5, 2507u},
    {18, 19, 18, 0, 5, 2579u},
    {17, 19, 18, -1, 5, 2633u},
    {17, 17, 18, 0, 5, 2687u},
    {11, 11, 21, 0, 5, 2741u},
    {9, 9, 20, 0, 5, 2783u},
    {11, 11, 21, 0, 5, 2823u},
    {20, 20, 18, 0, 5, 2865u},
    {12, 12, 6, 0, 23, 2919u},
    {12, 12, 19, 0, 4, 2931u},
    {16, 16, 13, 0, 10, 2969u},
    {17, 17, 18, 0, 5, 2995u},
    {14, 14, 13, 0, 10, 3049u},
    {17, 17, 18, 0, 5, 3075u},
    {16, 16, 13, 0, 10, 3129u},
    {10, 11, 18, 0, 5, 3155u},
    {17, 17, 18, 0, 10, 3191u},
    {17, 17, 18, 0, 5, 3245u},
    {8, 8, 18, 0, 5, 3299u},
    {8, 9, 23, -1, 5, 3317u},
    {16, 17, 18, 0, 5, 3363u},
    {8, 8, 18, 0, 5, 3417u},
    {25, 25, 13, 0, 10, 3435u},
    {17, 17, 13, 0, 10, 3487u},
    {16, 16, 13, 0, 10, 3526u},
    {17, 17, 18, 0, 10, 3552u},
    {17, 17, 18, 0, 10, 3606u},
    {12, 12, 13, 0, 10, 3660u},
    {14, 14, 13, 0, 10, 3686u},
    {11, 11, 17, 0, 6, 3712u},
    {17, 17, 13, 0, 10, 3746u},
    {16, 16, 13, 0, 10, 3785u},
    {22, 22, 13, 0, 10, 3811u},
    {15, 16, 13, 0, 10, 3850u},
    {16, 16, 18, 0, 10, 3876u},
    {14, 14, 13, 0, 10, 3912u},
    {17, 17, 22, 0, 5, 3938u},
    {9, 9, 24, 0, 5, 4004u},
    {17, 17, 22, 0, 5, 4052u},
    {20, 20, 11, 0, 12, 4118u},
};

inline constexpr uint8_t k_simhei_bitmap[] = {
    31, 0, 31, 0, 31, 0, 31, 0, 31, 0, 31, 0, 31, 0, 31, 0, 14, 0, 14, 0,
    14, 0, 14, 0, 0, 0, 0, 0, 31, 0, 31, 0, 31, 0, 31, 0, 57, 192, 57, 192,
    57, 192, 57, 192, 57, 192, 57, 192, 57, 192, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 227, 0, 0, 199, 0, 1, 199,
    0, 1, 199, 0, 1, 198, 0, 31, 255, 192, 31, 255, 192, 31, 255, 192, 3, 140, 0, 3,
    12, 0, 3, 28, 0, 63, 255, 128, 63, 255, 128, 63, 255, 128, 6, 56, 0, 14, 56, 0,
    14, 48, 0, 14, 48, 0, 1, 128, 0, 1, 128, 0, 1, 128, 0, 7, 240, 0, 31, 252,
    0, 63, 252, 0, 61, 140, 0, 61, 128, 0, 61, 128, 0, 63, 192, 0, 31, 248, 0, 15,
    252, 0, 3, 254, 0, 1, 158, 0, 1, 158, 0, 49, 158, 0, 63, 254, 0, 63, 252, 0,
    15, 240, 0, 1, 128, 0, 1, 128, 0, 1, 128, 0, 1, 128, 0, 31, 0, 192, 63, 129,
    192, 115, 193, 128, 113, 195, 128, 113, 199, 0, 113, 198, 0, 113, 206, 0, 115, 204, 0, 63,
    156, 248, 31, 57, 252, 0, 51, 206, 0, 115, 142, 0, 99, 142, 0, 227, 142, 1, 195, 142,
    1, 131, 206, 3, 129, 252, 3, 0, 248, 1, 248, 0, 7, 252, 0, 7, 252, 0, 15, 132,
    0, 15, 0, 0, 15, 128, 0, 7, 128, 0, 7, 192, 0, 31, 225, 224, 63, 241, 224, 60,
    249, 224, 60, 127, 192, 124, 63, 192, 60, 31, 128, 62, 31, 128, 63, 255, 192, 31, 255, 224,
    7, 241, 224, 56, 56, 56, 56, 56, 56, 56, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 7, 128, 7, 0, 15, 0, 14, 0, 30, 0, 30, 0, 30, 0, 60, 0, 60, 0, 60,
    0, 60, 0, 60, 0, 60, 0, 60, 0, 30, 0, 30, 0, 30, 0, 14, 0, 15, 0, 7,
    0, 7, 128, 60, 0, 28, 0, 30, 0, 14, 0, 15, 0, 15, 0, 15, 0, 7, 128, 7,
    128, 7, 128, 7, 128, 7, 128, 7, 128, 7, 128, 15, 0, 15, 0, 15, 0, 14, 0, 30,
    0, 28, 0, 60, 0, 6, 0, 6, 0, 70, 32, 118, 240, 63, 192, 15, 128, 63, 192, 118,
    240, 70, 32, 6, 0, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 96, 0, 0, 96, 0, 0, 96, 0, 0, 96, 0, 0, 96, 0, 0, 96, 0, 31,
    255, 192, 31, 255, 192, 31, 255, 192, 0, 96, 0, 0, 96, 0, 0, 96, 0, 0, 96, 0,
    0, 96, 0, 0, 96, 0, 62, 0, 62, 0, 62, 0, 62, 0, 60, 0, 56, 0, 56, 0,
    112, 0, 127, 128, 127, 128, 127, 128, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 3, 128, 3, 0, 7, 0, 7, 0, 6, 0,
    14, 0, 14, 0, 12, 0, 12, 0, 28, 0, 28, 0, 24, 0, 56, 0, 56, 0, 48, 0,
    112, 0, 112, 0, 96, 0, 224, 0, 224, 0, 3, 224, 0, 15, 248, 0, 31, 252, 0, 62,
    60, 0, 60, 62, 0, 60, 30, 0, 124, 30, 0, 124, 30, 0, 124, 31, 0, 124, 31, 0,
    124, 30, 0, 124, 30, 0, 60, 30, 0, 60, 62, 0, 62, 60, 0, 31, 252, 0, 15, 248,
    0, 3, 224, 0, 7, 224, 0, 31, 224, 0, 31, 224, 0, 25, 224, 0, 1, 224, 0, 1,
    224, 0, 1, 224, 0, 1, 224, 0, 1, 224, 0, 1, 224, 0, 1, 224, 0, 1, 224, 0,
    1, 224, 0, 1, 224, 0, 1, 224, 0, 31, 254, 0, 31, 254, 0, 31, 254, 0, 15, 224,
    0, 63, 248, 0, 63, 252, 0, 56, 124, 0, 32, 60, 0, 0, 60, 0, 0, 60, 0, 0,
    60, 0, 0, 124, 0, 0, 248, 0, 1, 240, 0, 3, 224, 0, 7, 192, 0, 15, 128, 0,
    62, 0, 0, 63, 254, 0, 63, 254, 0, 63, 254, 0, 15, 224, 0, 63, 248, 0, 63, 252,
    0, 48, 124, 0, 0, 60, 0, 0, 60, 0, 0, 124, 0, 7, 248, 0, 7, 240, 0, 7,
    252, 0, 0, 124, 0, 0, 62, 0, 0, 62, 0, 0, 62, 0, 32, 124, 0, 63, 252, 0,
    63, 248, 0, 31, 224, 0, 0, 248, 0, 1, 248, 0, 3, 248, 0, 3, 248, 0, 7, 248,
    0, 7, 120, 0, 14, 120, 0, 30, 120, 0, 28, 120, 0, 56, 120, 0, 120, 120, 0, 112,
    120, 0, 127, 255, 0, 127, 255, 0, 127, 255, 0, 0, 120, 0, 0, 120, 0, 0, 120, 0,
    31, 252, 0, 31, 252, 0, 31, 252, 0, 28, 0, 0, 28, 0, 0, 28, 0, 0, 31, 224,
    0, 31, 248, 0, 31, 252, 0, 16, 126, 0, 0, 62, 0, 0, 62, 0, 0, 62, 0, 0,
    62, 0, 48, 126, 0, 63, 252, 0, 63, 248, 0, 15, 224, 0, 1, 248, 0, 7, 252, 0,
    15, 252, 0, 31, 4, 0, 62, 0, 0, 60, 0, 0, 61, 240, 0, 63, 252, 0, 63, 252,
    0, 62, 62, 0, 62, 30, 0, 60, 30, 0, 60, 30, 0, 62, 30, 0, 30, 62, 0, 31,
    252, 0, 15, 248, 0, 3, 240, 0, 63, 254, 0, 63, 254, 0, 63, 254, 0, 0, 60, 0,
    0, 124, 0, 0, 124, 0, 0, 120, 0, 0, 248, 0, 0, 240, 0, 1, 240, 0, 1, 224,
    0, 3, 224, 0, 3, 192, 0, 3, 192, 0, 7, 192, 0, 7, 128, 0, 15, 128, 0, 15,
    0, 0, 7, 240, 0, 31, 252, 0, 63, 252, 0, 62, 62, 0, 60, 62, 0, 60, 62, 0,
    62, 60, 0, 31, 248, 0, 15, 240, 0, 31, 252, 0, 62, 62, 0, 60, 30, 0, 60, 30,
    0, 60, 30, 0, 62, 62, 0, 63, 254, 0, 31, 252, 0, 7, 240, 0, 7, 224, 0, 31,
    240, 0, 63, 248, 0, 62, 124, 0, 124, 60, 0, 124, 62, 0, 124, 62, 0, 124, 62, 0,
    62, 126, 0, 63, 254, 0, 31, 254, 0, 7, 222, 0, 0, 62, 0, 0, 60, 0, 48, 124,
    0, 63, 248, 0, 63, 240, 0, 15, 192, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0,
    0, 0, 0, 0, 0, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0,
    30, 0, 30, 0, 30, 0, 0, 0, 0, 0, 0, 0, 30, 0, 30, 0, 30, 0, 30, 0,
    60, 0, 60, 0, 56, 0, 48, 0, 0, 0, 192, 0, 3, 192, 0, 31, 192, 0, 255, 0,
    7, 248, 0, 31, 224, 0, 31, 0, 0, 31, 0, 0, 31, 192, 0, 7, 248, 0, 0, 255,
    0, 0, 31, 192, 0, 3, 192, 0, 0, 192, 31, 255, 192, 31, 255, 192, 31, 255, 192, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 31, 255, 192, 31, 255, 192, 31, 255, 192, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 16, 0, 0, 30, 0, 0, 31, 128, 0, 15, 240, 0, 1, 254,
    0, 0, 63, 128, 0, 15, 192, 0, 15, 192, 0, 63, 128, 1, 254, 0, 15, 240, 0, 31,
    128, 0, 30, 0, 0, 16, 0, 0, 63, 192, 63, 224, 63, 240, 32, 240, 0, 240, 0, 240,
    1, 240, 3, 224, 7, 192, 7, 128, 15, 128, 15, 0, 0, 0, 0, 0, 15, 0, 15, 0,
    15, 0, 15, 0, 0, 127, 0, 1, 255, 192, 7, 129, 224, 14, 0, 112, 28, 0, 56, 24,
    57, 152, 56, 255, 140, 48, 231, 140, 49, 195, 140, 49, 195, 140, 49, 195, 140, 49, 195, 140,
    49, 195, 156, 48, 231, 184, 56, 255, 240, 24, 57, 192, 28, 0, 0, 14, 0, 64, 7, 129,
    224, 1, 255, 192, 0, 126, 0, 3, 240, 0, 3, 248, 0, 3, 248, 0, 7, 248, 0, 7,
    252, 0, 7, 188, 0, 15, 188, 0, 15, 62, 0, 15, 30, 0, 31, 30, 0, 30, 31, 0,
    62, 15, 0, 63, 255, 0, 63, 255, 128, 127, 255, 128, 124, 7, 192, 120, 7, 192, 248, 3,
    192, 63, 248, 0, 63, 254, 0, 63, 254, 0, 62, 31, 0, 62, 31, 0, 62, 31, 0, 62,
    31, 0, 63, 254, 0, 63, 252, 0, 63, 254, 0, 62, 31, 0, 62, 15, 0, 62, 15, 128,
    62, 15, 128, 62, 31, 0, 63, 255, 0, 63, 254, 0, 63, 248, 0, 1, 252, 0, 7, 255,
    0, 15, 255, 0, 31, 131, 0, 62, 1, 0, 62, 0, 0, 60, 0, 0, 124, 0, 0, 124,
    0, 0, 124, 0, 0, 124, 0, 0, 60, 0, 0, 62, 0, 0, 62, 1, 0, 31, 131, 0,
    15, 255, 0, 7, 255, 0, 1, 252, 0, 63, 240, 0, 63, 254, 0, 63, 255, 0, 62, 31,
    128, 62, 15, 192, 62, 7, 192, 62, 3, 192, 62, 3, 224, 62, 3, 224, 62, 3, 224, 62,
    3, 224, 62, 3, 192, 62, 7, 192, 62, 15, 192, 62, 31, 128, 63, 255, 0, 63, 254, 0,
    63, 248, 0, 63, 252, 63, 252, 63, 252, 62, 0, 62, 0, 62, 0, 62, 0, 63, 252, 63,
    252, 63, 252, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 63, 254, 63, 254, 63, 254, 63,
    252, 63, 252, 63, 252, 62, 0, 62, 0, 62, 0, 62, 0, 63, 252, 63, 252, 63, 252, 62,
    0, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 1, 254, 0, 7, 255,
    128, 15, 255, 128, 31, 131, 128, 62, 0, 128, 62, 0, 0, 60, 0, 0, 124, 0, 0, 124,
    31, 192, 124, 31, 192, 124, 31, 192, 60, 3, 192, 62, 3, 192, 62, 3, 192, 31, 135, 192,
    15, 255, 192, 7, 255, 192, 1, 254, 0, 62, 7, 192, 62, 7, 192, 62, 7, 192, 62, 7,
    192, 62, 7, 192, 62, 7, 192, 62, 7, 192, 63, 255, 192, 63, 255, 192, 63, 255, 192, 62,
    7, 192, 62, 7, 192, 62, 7, 192, 62, 7, 192, 62, 7, 192, 62, 7, 192, 62, 7, 192,
    62, 7, 192, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 62,
    0, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 15,
    128, 15, 128, 15, 128, 15, 128, 15, 128, 15, 128, 15, 128, 15, 128, 15, 128, 15, 128, 15,
    128, 15, 128, 15, 128, 15, 128, 15, 128, 15, 128, 15, 128, 15, 128, 15, 128, 31, 0, 127,
    0, 126, 0, 120, 0, 62, 7, 192, 62, 15, 128, 62, 31, 0, 62, 62, 0, 62, 124, 0,
    62, 248, 0, 63, 240, 0, 63, 224, 0, 63, 192, 0, 63, 224, 0, 63, 240, 0, 63, 248,
    0, 62, 252, 0, 62, 126, 0, 62, 63, 0, 62, 31, 128, 62, 15, 192, 62, 7, 224, 62,
    0, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 62,
    0, 62, 0, 62, 0, 62, 0, 62, 0, 63, 254, 63, 254, 63, 254, 63, 0, 252, 63, 129,
    252, 63, 129, 252, 63, 129, 252, 63, 195, 252, 63, 195, 252, 61, 231, 252, 61, 231, 124, 60,
    231, 124, 60, 255, 124, 60, 126, 124, 60, 126, 124, 60, 60, 124, 60, 60, 124, 60, 60, 124,
    60, 0, 124, 60, 0, 124, 60, 0, 124, 63, 3, 192, 63, 3, 192, 63, 131, 192, 63, 131,
    192, 63, 195, 192, 63, 195, 192, 63, 227, 192, 61, 227, 192, 60, 243, 192, 60, 243, 192, 60,
    123, 192, 60, 127, 192, 60, 63, 192, 60, 31, 192, 60, 31, 192, 60, 15, 192, 60, 15, 192,
    60, 7, 192, 1, 252, 0, 7, 255, 0, 15, 255, 128, 31, 15, 192, 62, 7, 192, 62, 3,
    224, 124, 3, 224, 124, 3, 224, 124, 1, 224, 124, 1, 224, 124, 3, 224, 124, 3, 224, 60,
    3, 224, 62, 7, 192, 31, 15, 192, 15, 255, 128, 7, 255, 0, 1, 252, 0, 63, 248, 0,
    63, 254, 0, 63, 255, 0, 62, 31, 0, 62, 15, 128, 62, 15, 128, 62, 15, 128, 62, 31,
    0, 63, 255, 0, 63, 254, 0, 63, 248, 0, 62, 0, 0, 62, 0, 0, 62, 0, 0, 62,
    0, 0, 62, 0, 0, 62, 0, 0, 62, 0, 0, 1, 252, 0, 7, 255, 0, 15, 255, 128,
    31, 15, 192, 62, 7, 192, 62, 3, 224, 124, 3, 224, 124, 3, 224, 124, 1, 224, 124, 1,
    224, 124, 3, 224, 124, 3, 224, 60, 3, 224, 62, 7, 192, 31, 15, 192, 15, 255, 128, 7,
    255, 0, 1, 254, 0, 0, 30, 0, 0, 15, 0, 0, 15, 128, 0, 7, 128, 63, 248, 0,
    63, 252, 0, 63, 254, 0, 62, 63, 0, 62, 31, 0, 62, 31, 0, 62, 31, 0, 62, 62,
    0, 63, 252, 0, 63, 248, 0, 63, 252, 0, 62, 62, 0, 62, 30, 0, 62, 31, 0, 62,
    15, 0, 62, 15, 128, 62, 7, 128, 62, 7, 192, 7, 248, 0, 31, 252, 0, 31, 252, 0,
    62, 28, 0, 60, 0, 0, 60, 0, 0, 62, 0, 0, 63, 192, 0, 31, 248, 0, 15, 254,
    0, 3, 254, 0, 0, 62, 0, 0, 31, 0, 32, 30, 0, 56, 62, 0, 63, 254, 0, 63,
    252, 0, 15, 240, 0, 255, 255, 0, 255, 255, 0, 255, 255, 0, 3, 192, 0, 3, 192, 0,
    3, 192, 0, 3, 192, 0, 3, 192, 0, 3, 192, 0, 3, 192, 0, 3, 192, 0, 3, 192,
    0, 3, 192, 0, 3, 192, 0, 3, 192, 0, 3, 192, 0, 3, 192, 0, 3, 192, 0, 62,
    7, 128, 62, 7, 128, 62, 7, 128, 62, 7, 128, 62, 7, 128, 62, 7, 128, 62, 7, 128,
    62, 7, 128, 62, 7, 128, 62, 7, 128, 62, 7, 128, 62, 7, 128, 62, 7, 128, 30, 15,
    128, 31, 31, 128, 31, 255, 0, 15, 254, 0, 3, 248, 0, 248, 3, 192, 120, 7, 192, 124,
    7, 192, 124, 7, 128, 60, 15, 128, 62, 15, 0, 62, 15, 0, 30, 31, 0, 31, 30, 0,
    15, 30, 0, 15, 62, 0, 15, 188, 0, 7, 188, 0, 7, 252, 0, 7, 248, 0, 3, 248,
    0, 3, 248, 0, 3, 240, 0, 120, 31, 7, 192, 120, 31, 7, 128, 124, 63, 7, 128, 60,
    63, 7, 128, 60, 63, 15, 128, 60, 63, 143, 0, 62, 59, 143, 0, 62, 115, 143, 0, 30,
    115, 159, 0, 30, 115, 223, 0, 30, 113, 222, 0, 31, 241, 222, 0, 15, 225, 254, 0, 15,
    225, 254, 0, 15, 224, 252, 0, 15, 224, 252, 0, 7, 192, 252, 0, 7, 192, 252, 0, 124,
    7, 128, 60, 15, 128, 62, 31, 0, 31, 30, 0, 15, 62, 0, 15, 252, 0, 7, 248, 0,
    3, 248, 0, 3, 240, 0, 3, 240, 0, 7, 248, 0, 7, 252, 0, 15, 188, 0, 31, 62,
    0, 30, 31, 0, 62, 15, 0, 124, 15, 128, 124, 7, 192, 124, 7, 192, 62, 7, 192, 62,
    15, 128, 31, 31, 0, 15, 159, 0, 15, 190, 0, 7, 252, 0, 3, 252, 0, 3, 248, 0,
    1, 248, 0, 1, 240, 0, 1, 240, 0, 1, 240, 0, 1, 240, 0, 1, 240, 0, 1, 240,
    0, 1, 240, 0, 1, 240, 0, 127, 255, 0, 127, 255, 0, 127, 255, 0, 0, 63, 0, 0,
    126, 0, 0, 124, 0, 0, 248, 0, 1, 240, 0, 3, 240, 0, 7, 224, 0, 7, 192, 0,
    15, 128, 0, 31, 128, 0, 63, 0, 0, 62, 0, 0, 127, 255, 0, 127, 255, 0, 127, 255,
    0, 63, 128, 63, 128, 63, 128, 60, 0, 60, 0, 60, 0, 60, 0, 60, 0, 60, 0, 60,
    0, 60, 0, 60, 0, 60, 0, 60, 0, 60, 0, 60, 0, 60, 0, 60, 0, 63, 128, 63,
    128, 63, 128, 224, 0, 224, 0, 96, 0, 112, 0, 112, 0, 48, 0, 56, 0, 56, 0, 24,
    0, 28, 0, 28, 0, 12, 0, 12, 0, 14, 0, 14, 0, 6, 0, 7, 0, 7, 0, 3,
    0, 3, 128, 63, 128, 63, 128, 63, 128, 7, 128, 7, 128, 7, 128, 7, 128, 7, 128, 7,
    128, 7, 128, 7, 128, 7, 128, 7, 128, 7, 128, 7, 128, 7, 128, 7, 128, 7, 128, 63,
    128, 63, 128, 63, 128, 0, 240, 0, 1, 248, 0, 3, 252, 0, 3, 254, 0, 7, 14, 0,
    14, 7, 0, 28, 3, 128, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 255, 240, 255, 240, 56, 0, 28, 0, 12, 0, 6, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 15, 224, 63, 248, 63, 252, 48, 124, 0, 60, 15,
    252, 63, 252, 127, 252, 124, 60, 124, 124, 127, 252, 63, 252, 31, 60, 60, 0, 0, 60, 0,
    0, 60, 0, 0, 60, 0, 0, 60, 0, 0, 60, 248, 0, 63, 252, 0, 63, 254, 0, 62,
    31, 0, 62, 31, 0, 60, 15, 0, 60, 15, 0, 60, 15, 0, 62, 31, 0, 62, 31, 0,
    63, 254, 0, 63, 252, 0, 60, 248, 0, 7, 224, 31, 248, 63, 248, 62, 8, 124, 0, 124,
    0, 120, 0, 124, 0, 124, 0, 62, 8, 63, 248, 31, 248, 7, 224, 0, 30, 0, 0, 30,
    0, 0, 30, 0, 0, 30, 0, 0, 30, 0, 15, 158, 0, 31, 222, 0, 63, 254, 0, 62,
    62, 0, 124, 30, 0, 124, 30, 0, 120, 30, 0, 124, 30, 0, 124, 30, 0, 62, 62, 0,
    63, 254, 0, 31, 222, 0, 15, 158, 0, 7, 224, 31, 248, 63, 252, 60, 60, 124, 30, 127,
    254, 127, 254, 127, 254, 124, 0, 60, 4, 63, 254, 31, 254, 7, 248, 7, 224, 31, 224, 31,
    224, 30, 0, 30, 0, 255, 192, 255, 192, 255, 192, 30, 0, 30, 0, 30, 0, 30, 0, 30,
    0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 15, 158, 0, 31, 222, 0, 63, 254, 0,
    62, 62, 0, 124, 30, 0, 124, 30, 0, 120, 30, 0, 124, 30, 0, 124, 30, 0, 62, 62,
    0, 63, 254, 0, 31, 222, 0, 15, 158, 0, 0, 30, 0, 16, 62, 0, 31, 252, 0, 31,
    248, 0, 15, 224, 0, 60, 0, 0, 60, 0, 0, 60, 0, 0, 60, 0, 0, 60, 0, 0,
    60, 248, 0, 61, 252, 0, 63, 254, 0, 63, 62, 0, 62, 30, 0, 60, 30, 0, 60, 30,
    0, 60, 30, 0, 60, 30, 0, 60, 30, 0, 60, 30, 0, 60, 30, 0, 60, 30, 0, 60,
    60, 60, 60, 0, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 30, 0, 30,
    0, 30, 0, 30, 0, 0, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30,
    0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 30, 0, 62, 0, 254, 0, 252,
    0, 248, 0, 60, 0, 0, 60, 0, 0, 60, 0, 0, 60, 0, 0, 60, 0, 0, 60, 30,
    0, 60, 60, 0, 60, 120, 0, 60, 240, 0, 63, 224, 0, 63, 192, 0, 63, 192, 0, 63,
    224, 0, 61, 240, 0, 60, 248, 0, 60, 124, 0, 60, 62, 0, 60, 31, 0, 60, 60, 60,
    60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 60, 240, 248, 0, 63,
    253, 252, 0, 63, 255, 254, 0, 62, 63, 62, 0, 62, 62, 30, 0, 60, 62, 30, 0, 60,
    62, 30, 0, 60, 62, 30, 0, 60, 62, 30, 0, 60, 62, 30, 0, 60, 62, 30, 0, 60,
    62, 30, 0, 60, 62, 30, 0, 60, 248, 0, 61, 252, 0, 63, 254, 0, 63, 62, 0, 62,
    30, 0, 60, 30, 0, 60, 30, 0, 60, 30, 0, 60, 30, 0, 60, 30, 0, 60, 30, 0,
    60, 30, 0, 60, 30, 0, 7, 224, 31, 248, 63, 252, 62, 62, 124, 30, 124, 30, 120, 30,
    124, 30, 124, 30, 62, 62, 63, 252, 31, 248, 7, 224, 60, 248, 0, 63, 252, 0, 63, 254,
    0, 62, 31, 0, 62, 31, 0, 60, 15, 0, 60, 15, 0, 60, 15, 0, 62, 31, 0, 62,
    31, 0, 63, 254, 0, 63, 252, 0, 60, 248, 0, 60, 0, 0, 60, 0, 0, 60, 0, 0,
    60, 0, 0, 60, 0, 0, 15, 158, 0, 31, 222, 0, 63, 254, 0, 62, 62, 0, 124, 30,
    0, 124, 30, 0, 120, 30, 0, 124, 30, 0, 124, 30, 0, 62, 62, 0, 63, 254, 0, 31,
    222, 0, 15, 158, 0, 0, 30, 0, 0, 30, 0, 0, 30, 0, 0, 30, 0, 0, 30, 0,
    60, 240, 63, 240, 63, 240, 63, 16, 62, 0, 60, 0, 60, 0, 60, 0, 60, 0, 60, 0,
    60, 0, 60, 0, 60, 0, 15, 224, 63, 240, 127, 240, 120, 16, 120, 0, 63, 192, 63, 240,
    7, 248, 0, 120, 96, 120, 127, 248, 127, 240, 31, 224, 62, 0, 62, 0, 62, 0, 62, 0,
    255, 224, 255, 224, 255, 224, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0, 62, 0,
    31, 224, 31, 224, 15, 224, 60, 30, 0, 60, 30, 0, 60, 30, 0, 60, 30, 0, 60, 30,
    0, 60, 30, 0, 60, 30, 0, 60, 30, 0, 60, 62, 0, 62, 62, 0, 63, 254, 0, 31,
    222, 0, 15, 158, 0, 120, 30, 120, 30, 120, 60, 60, 60, 60, 124, 30, 120, 30, 120, 30,
    240, 15, 240, 15, 240, 7, 224, 7, 224, 7, 192, 120, 120, 120, 120, 120, 120, 60, 120, 120,
    60, 252, 240, 60, 252, 240, 60, 252, 240, 30, 204, 240, 31, 207, 224, 31, 207, 224, 31, 207,
    224, 15, 199, 224, 15, 135, 192, 15, 135, 192, 120, 62, 60, 124, 62, 120, 31, 240, 15, 240,
    7, 224, 7, 192, 15, 224, 15, 240, 30, 248, 62, 120, 124, 60, 120, 62, 120, 30, 120, 30,
    120, 60, 60, 60, 60, 120, 30, 120, 30, 120, 14, 240, 15, 240, 15, 224, 7, 224, 7, 224,
    3, 192, 3, 192, 7, 128, 63, 128, 63, 0, 62, 0, 127, 248, 127, 248, 127, 248, 0, 240,
    1, 224, 3, 192, 7, 128, 15, 0, 30, 0, 60, 0, 127, 248, 127, 248, 127, 248, 0, 124,
    0, 0, 252, 0, 1, 252, 0, 1, 224, 0, 1, 224, 0, 1, 224, 0, 1, 224, 0, 1,
    224, 0, 3, 224, 0, 3, 192, 0, 31, 192, 0, 31, 128, 0, 31, 192, 0, 3, 192, 0,
    3, 224, 0, 1, 224, 0, 1, 224, 0, 1, 224, 0, 1, 224, 0, 1, 252, 0, 1, 252,
    0, 0, 124, 0, 28, 0, 28, 0, 28, 0, 28, 0, 28, 0, 28, 0, 28, 0, 28, 0,
    28, 0, 28, 0, 28, 0, 28, 0, 28, 0, 28, 0, 28, 0, 28, 0, 28, 0, 28, 0,
    28, 0, 28, 0, 28, 0, 28, 0, 28, 0, 28, 0, 31, 0, 0, 31, 192, 0, 31, 192,
    0, 3, 192, 0, 3, 192, 0, 3, 192, 0, 3, 192, 0, 3, 192, 0, 1, 224, 0, 1,
    224, 0, 1, 252, 0, 0, 252, 0, 1, 252, 0, 1, 224, 0, 3, 224, 0, 3, 192, 0,
    3, 192, 0, 3, 192, 0, 3, 192, 0, 31, 192, 0, 31, 192, 0, 31, 0, 0, 0, 0,
    0, 7, 128, 64, 31, 225, 192, 31, 255, 192, 24, 127, 128, 0, 30, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
};

inline constexpr Face k_builtin_faces[] = {
    {"times-new-roman", 24, 23, 6, k_times_new_roman_glyphs, k_times_new_roman_bitmap},
    {"simsun", 24, 23, 6, k_simsun_glyphs, k_simsun_bitmap},
    {"kaiti", 24, 23, 6, k_kaiti_glyphs, k_kaiti_bitmap},
    {"microsoft-yahei", 24, 23, 6, k_microsoft_yahei_glyphs, k_microsoft_yahei_bitmap},
    {"simhei", 24, 23, 6, k_simhei_glyphs, k_simhei_bitmap},
};

}  // namespace fsts::font_data
