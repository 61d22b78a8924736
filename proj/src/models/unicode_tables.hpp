#pragma once

// Generated from the Unicode database (Python unicodedata).

#include <cstdint>
#include <string_view>

namespace aspectsim::models::unicode {

struct CodepointRange {
  char32_t first;
  char32_t last;
};

struct FoldEntry {
  char32_t cp;
  std::string_view folded;
};

inline constexpr CodepointRange kPunctuation[] = {
    {0x00A1, 0x00A1},
    {0x00A7, 0x00A7},
    {0x00AB, 0x00AB},
    {0x00B6, 0x00B7},
    {0x00BB, 0x00BB},
    {0x00BF, 0x00BF},
    {0x037E, 0x037E},
    {0x0387, 0x0387},
    {0x055A, 0x055F},
    {0x0589, 0x058A},
    {0x05BE, 0x05BE},
    {0x05C0, 0x05C0},
    {0x05C3, 0x05C3},
    {0x05C6, 0x05C6},
    {0x05F3, 0x05F4},
    {0x0609, 0x060A},
    {0x060C, 0x060D},
    {0x061B, 0x061B},
    {0x061E, 0x061F},
    {0x066A, 0x066D},
    {0x06D4, 0x06D4},
    {0x0700, 0x070D},
    {0x07F7, 0x07F9},
    {0x0830, 0x083E},
    {0x085E, 0x085E},
    {0x0964, 0x0965},
    {0x0970, 0x0970},
    {0x09FD, 0x09FD},
    {0x0A76, 0x0A76},
    {0x0AF0, 0x0AF0},
    {0x0C77, 0x0C77},
    {0x0C84, 0x0C84},
    {0x0DF4, 0x0DF4},
    {0x0E4F, 0x0E4F},
    {0x0E5A, 0x0E5B},
    {0x0F04, 0x0F12},
    {0x0F14, 0x0F14},
    {0x0F3A, 0x0F3D},
    {0x0F85, 0x0F85},
    {0x0FD0, 0x0FD4},
    {0x0FD9, 0x0FDA},
    {0x104A, 0x104F},
    {0x10FB, 0x10FB},
    {0x1360, 0x1368},
    {0x1400, 0x1400},
    {0x166E, 0x166E},
    {0x169B, 0x169C},
    {0x16EB, 0x16ED},
    {0x1735, 0x1736},
    {0x17D4, 0x17D6},
    {0x17D8, 0x17DA},
    {0x1800, 0x180A},
    {0x1944, 0x1945},
    {0x1A1E, 0x1A1F},
    {0x1AA0, 0x1AA6},
    {0x1AA8, 0x1AAD},
    {0x1B5A, 0x1B60},
    {0x1BFC, 0x1BFF},
    {0x1C3B, 0x1C3F},
    {0x1C7E, 0x1C7F},
    {0x1CC0, 0x1CC7},
    {0x1CD3, 0x1CD3},
    {0x2010, 0x2027},
    {0x2030, 0x2043},
    {0x2045, 0x2051},
    {0x2053, 0x205E},
    {0x207D, 0x207E},
    {0x208D, 0x208E},
    {0x2308, 0x230B},
    {0x2329, 0x232A},
    {0x2768, 0x2775},
    {0x27C5, 0x27C6},
    {0x27E6, 0x27EF},
    {0x2983, 0x2998},
    {0x29D8, 0x29DB},
    {0x29FC, 0x29FD},
    {0x2CF9, 0x2CFC},
    {0x2CFE, 0x2CFF},
    {0x2D70, 0x2D70},
    {0x2E00, 0x2E2E},
    {0x2E30, 0x2E4F},
    {0x2E52, 0x2E52},
    {0x3001, 0x3003},
    {0x3008, 0x3011},
    {0x3014, 0x301F},
    {0x3030, 0x3030},
    {0x303D, 0x303D},
    {0x30A0, 0x30A0},
    {0x30FB, 0x30FB},
    {0xA4FE, 0xA4FF},
    {0xA60D, 0xA60F},
    {0xA673, 0xA673},
    {0xA67E, 0xA67E},
    {0xA6F2, 0xA6F7},
    {0xA874, 0xA877},
    {0xA8CE, 0xA8CF},
    {0xA8F8, 0xA8FA},
    {0xA8FC, 0xA8FC},
    {0xA92E, 0xA92F},
    {0xA95F, 0xA95F},
    {0xA9C1, 0xA9CD},
    {0xA9DE, 0xA9DF},
    {0xAA5C, 0xAA5F},
    {0xAADE, 0xAADF},
    {0xAAF0, 0xAAF1},
    {0xABEB, 0xABEB},
    {0xFD3E, 0xFD3F},
    {0xFE10, 0xFE19},
    {0xFE30, 0xFE52},
    {0xFE54, 0xFE61},
    {0xFE63, 0xFE63},
    {0xFE68, 0xFE68},
    {0xFE6A, 0xFE6B},
    {0xFF01, 0xFF03},
    {0xFF05, 0xFF0A},
    {0xFF0C, 0xFF0F},
    {0xFF1A, 0xFF1B},
    {0xFF1F, 0xFF20},
    {0xFF3B, 0xFF3D},
    {0xFF3F, 0xFF3F},
    {0xFF5B, 0xFF5B},
    {0xFF5D, 0xFF5D},
    {0xFF5F, 0xFF65},
};

inline constexpr CodepointRange kNonspacingMarks[] = {
    {0x0300, 0x036F},
    {0x0483, 0x0487},
    {0x0591, 0x05BD},
    {0x05BF, 0x05BF},
    {0x05C1, 0x05C2},
    {0x05C4, 0x05C5},
    {0x05C7, 0x05C7},
    {0x0610, 0x061A},
    {0x064B, 0x065F},
    {0x0670, 0x0670},
    {0x06D6, 0x06DC},
    {0x06DF, 0x06E4},
    {0x06E7, 0x06E8},
    {0x06EA, 0x06ED},
    {0x0711, 0x0711},
    {0x0730, 0x074A},
    {0x07A6, 0x07B0},
    {0x07EB, 0x07F3},
    {0x07FD, 0x07FD},
    {0x0816, 0x0819},
    {0x081B, 0x0823},
    {0x0825, 0x0827},
    {0x0829, 0x082D},
    {0x0859, 0x085B},
    {0x08D3, 0x08E1},
    {0x08E3, 0x0902},
    {0x093A, 0x093A},
    {0x093C, 0x093C},
    {0x0941, 0x0948},
    {0x094D, 0x094D},
    {0x0951, 0x0957},
    {0x0962, 0x0963},
    {0x0981, 0x0981},
    {0x09BC, 0x09BC},
    {0x09C1, 0x09C4},
    {0x09CD, 0x09CD},
    {0x09E2, 0x09E3},
    {0x09FE, 0x09FE},
    {0x0A01, 0x0A02},
    {0x0A3C, 0x0A3C},
    {0x0A41, 0x0A42},
    {0x0A47, 0x0A48},
    {0x0A4B, 0x0A4D},
    {0x0A51, 0x0A51},
    {0x0A70, 0x0A71},
    {0x0A75, 0x0A75},
    {0x0A81, 0x0A82},
    {0x0ABC, 0x0ABC},
    {0x0AC1, 0x0AC5},
    {0x0AC7, 0x0AC8},
    {0x0ACD, 0x0ACD},
    {0x0AE2, 0x0AE3},
    {0x0AFA, 0x0AFF},
    {0x0B01, 0x0B01},
    {0x0B3C, 0x0B3C},
    {0x0B3F, 0x0B3F},
    {0x0B41, 0x0B44},
    {0x0B4D, 0x0B4D},
    {0x0B55, 0x0B56},
    {0x0B62, 0x0B63},
    {0x0B82, 0x0B82},
    {0x0BC0, 0x0BC0},
    {0x0BCD, 0x0BCD},
    {0x0C00, 0x0C00},
    {0x0C04, 0x0C04},
    {0x0C3E, 0x0C40},
    {0x0C46, 0x0C48},
    {0x0C4A, 0x0C4D},
    {0x0C55, 0x0C56},
    {0x0C62, 0x0C63},
    {0x0C81, 0x0C81},
    {0x0CBC, 0x0CBC},
    {0x0CBF, 0x0CBF},
    {0x0CC6, 0x0CC6},
    {0x0CCC, 0x0CCD},
    {0x0CE2, 0x0CE3},
    {0x0D00, 0x0D01},
    {0x0D3B, 0x0D3C},
    {0x0D41, 0x0D44},
    {0x0D4D, 0x0D4D},
    {0x0D62, 0x0D63},
    {0x0D81, 0x0D81},
    {0x0DCA, 0x0DCA},
    {0x0DD2, 0x0DD4},
    {0x0DD6, 0x0DD6},
    {0x0E31, 0x0E31},
    {0x0E34, 0x0E3A},
    {0x0E47, 0x0E4E},
    {0x0EB1, 0x0EB1},
    {0x0EB4, 0x0EBC},
    {0x0EC8, 0x0ECD},
    {0x0F18, 0x0F19},
    {0x0F35, 0x0F35},
    {0x0F37, 0x0F37},
    {0x0F39, 0x0F39},
    {0x0F71, 0x0F7E},
    {0x0F80, 0x0F84},
    {0x0F86, 0x0F87},
    {0x0F8D, 0x0F97},
    {0x0F99, 0x0FBC},
    {0x0FC6, 0x0FC6},
    {0x102D, 0x1030},
    {0x1032, 0x1037},
    {0x1039, 0x103A},
    {0x103D, 0x103E},
    {0x1058, 0x1059},
    {0x105E, 0x1060},
    {0x1071, 0x1074},
    {0x1082, 0x1082},
    {0x1085, 0x1086},
    {0x108D, 0x108D},
    {0x109D, 0x109D},
    {0x135D, 0x135F},
    {0x1712, 0x1714},
    {0x1732, 0x1734},
    {0x1752, 0x1753},
    {0x1772, 0x1773},
    {0x17B4, 0x17B5},
    {0x17B7, 0x17BD},
    {0x17C6, 0x17C6},
    {0x17C9, 0x17D3},
    {0x17DD, 0x17DD},
    {0x180B, 0x180D},
    {0x1885, 0x1886},
    {0x18A9, 0x18A9},
    {0x1920, 0x1922},
    {0x1927, 0x1928},
    {0x1932, 0x1932},
    {0x1939, 0x193B},
    {0x1A17, 0x1A18},
    {0x1A1B, 0x1A1B},
    {0x1A56, 0x1A56},
    {0x1A58, 0x1A5E},
    {0x1A60, 0x1A60},
    {0x1A62, 0x1A62},
    {0x1A65, 0x1A6C},
    {0x1A73, 0x1A7C},
    {0x1A7F, 0x1A7F},
    {0x1AB0, 0x1ABD},
    {0x1ABF, 0x1AC0},
    {0x1B00, 0x1B03},
    {0x1B34, 0x1B34},
    {0x1B36, 0x1B3A},
    {0x1B3C, 0x1B3C},
    {0x1B42, 0x1B42},
    {0x1B6B, 0x1B73},
    {0x1B80, 0x1B81},
    {0x1BA2, 0x1BA5},
    {0x1BA8, 0x1BA9},
    {0x1BAB, 0x1BAD},
    {0x1BE6, 0x1BE6},
    {0x1BE8, 0x1BE9},
    {0x1BED, 0x1BED},
    {0x1BEF, 0x1BF1},
    {0x1C2C, 0x1C33},
    {0x1C36, 0x1C37},
    {0x1CD0, 0x1CD2},
    {0x1CD4, 0x1CE0},
    {0x1CE2, 0x1CE8},
    {0x1CED, 0x1CED},
    {0x1CF4, 0x1CF4},
    {0x1CF8, 0x1CF9},
    {0x1DC0, 0x1DF9},
    {0x1DFB, 0x1DFF},
    {0x20D0, 0x20DC},
    {0x20E1, 0x20E1},
    {0x20E5, 0x20F0},
    {0x2CEF, 0x2CF1},
    {0x2D7F, 0x2D7F},
    {0x2DE0, 0x2DFF},
    {0x302A, 0x302D},
    {0x3099, 0x309A},
    {0xA66F, 0xA66F},
    {0xA674, 0xA67D},
    {0xA69E, 0xA69F},
    {0xA6F0, 0xA6F1},
    {0xA802, 0xA802},
    {0xA806, 0xA806},
    {0xA80B, 0xA80B},
    {0xA825, 0xA826},
    {0xA82C, 0xA82C},
    {0xA8C4, 0xA8C5},
    {0xA8E0, 0xA8F1},
    {0xA8FF, 0xA8FF},
    {0xA926, 0xA92D},
    {0xA947, 0xA951},
    {0xA980, 0xA982},
    {0xA9B3, 0xA9B3},
    {0xA9B6, 0xA9B9},
    {0xA9BC, 0xA9BD},
    {0xA9E5, 0xA9E5},
    {0xAA29, 0xAA2E},
    {0xAA31, 0xAA32},
    {0xAA35, 0xAA36},
    {0xAA43, 0xAA43},
    {0xAA4C, 0xAA4C},
    {0xAA7C, 0xAA7C},
    {0xAAB0, 0xAAB0},
    {0xAAB2, 0xAAB4},
    {0xAAB7, 0xAAB8},
    {0xAABE, 0xAABF},
    {0xAAC1, 0xAAC1},
    {0xAAEC, 0xAAED},
    {0xAAF6, 0xAAF6},
    {0xABE5, 0xABE5},
    {0xABE8, 0xABE8},
    {0xABED, 0xABED},
    {0xFB1E, 0xFB1E},
    {0xFE00, 0xFE0F},
    {0xFE20, 0xFE2F},
};

inline constexpr CodepointRange kFormatControls[] = {
    {0x0080, 0x009F},
    {0x00AD, 0x00AD},
    {0x0600, 0x0605},
    {0x061C, 0x061C},
    {0x06DD, 0x06DD},
    {0x070F, 0x070F},
    {0x08E2, 0x08E2},
    {0x180E, 0x180E},
    {0x200B, 0x200F},
    {0x202A, 0x202E},
    {0x2060, 0x2064},
    {0x2066, 0x206F},
    {0xFEFF, 0xFEFF},
    {0xFFF9, 0xFFFB},
};

inline constexpr CodepointRange kSpaceSeparators[] = {
    {0x00A0, 0x00A0},
    {0x1680, 0x1680},
    {0x2000, 0x200A},
    {0x202F, 0x202F},
    {0x205F, 0x205F},
    {0x3000, 0x3000},
};

// Lowercased, accent-stripped form of non-ASCII letters (sorted by code point).

inline constexpr FoldEntry kLowerStrip[] = {
    {0x00C0, "a"},
    {0x00C1, "a"},
    {0x00C2, "a"},
    {0x00C3, "a"},
    {0x00C4, "a"},
    {0x00C5, "a"},
    {0x00C6, "\xc3\xa6"},
    {0x00C7, "c"},
    {0x00C8, "e"},
    {0x00C9, "e"},
    {0x00CA, "e"},
    {0x00CB, "e"},
    {0x00CC, "i"},
    {0x00CD, "i"},
    {0x00CE, "i"},
    {0x00CF, "i"},
    {0x00D0, "\xc3\xb0"},
    {0x00D1, "n"},
    {0x00D2, "o"},
    {0x00D3, "o"},
    {0x00D4, "o"},
    {0x00D5, "o"},
    {0x00D6, "o"},
    {0x00D8, "\xc3\xb8"},
    {0x00D9, "u"},
    {0x00DA, "u"},
    {0x00DB, "u"},
    {0x00DC, "u"},
    {0x00DD, "y"},
    {0x00DE, "\xc3\xbe"},
    {0x00E0, "a"},
    {0x00E1, "a"},
    {0x00E2, "a"},
    {0x00E3, "a"},
    {0x00E4, "a"},
    {0x00E5, "a"},
    {0x00E7, "c"},
    {0x00E8, "e"},
    {0x00E9, "e"},
    {0x00EA, "e"},
    {0x00EB, "e"},
    {0x00EC, "i"},
    {0x00ED, "i"},
    {0x00EE, "i"},
    {0x00EF, "i"},
    {0x00F1, "n"},
    {0x00F2, "o"},
    {0x00F3, "o"},
    {0x00F4, "o"},
    {0x00F5, "o"},
    {0x00F6, "o"},
    {0x00F9, "u"},
    {0x00FA, "u"},
    {0x00FB, "u"},
    {0x00FC, "u"},
    {0x00FD, "y"},
    {0x00FF, "y"},
    {0x0100, "a"},
    {0x0101, "a"},
    {0x0102, "a"},
    {0x0103, "a"},
    {0x0104, "a"},
    {0x0105, "a"},
    {0x0106, "c"},
    {0x0107, "c"},
    {0x0108, "c"},
    {0x0109, "c"},
    {0x010A, "c"},
    {0x010B, "c"},
    {0x010C, "c"},
    {0x010D, "c"},
    {0x010E, "d"},
    {0x010F, "d"},
    {0x0110, "\xc4\x91"},
    {0x0112, "e"},
    {0x0113, "e"},
    {0x0114, "e"},
    {0x0115, "e"},
    {0x0116, "e"},
    {0x0117, "e"},
    {0x0118, "e"},
    {0x0119, "e"},
    {0x011A, "e"},
    {0x011B, "e"},
    {0x011C, "g"},
    {0x011D, "g"},
    {0x011E, "g"},
    {0x011F, "g"},
    {0x0120, "g"},
    {0x0121, "g"},
    {0x0122, "g"},
    {0x0123, "g"},
    {0x0124, "h"},
    {0x0125, "h"},
    {0x0126, "\xc4\xa7"},
    {0x0128, "i"},
    {0x0129, "i"},
    {0x012A, "i"},
    {0x012B, "i"},
    {0x012C, "i"},
    {0x012D, "i"},
    {0x012E, "i"},
    {0x012F, "i"},
    {0x0130, "i"},
    {0x0132, "\xc4\xb3"},
    {0x0134, "j"},
    {0x0135, "j"},
    {0x0136, "k"},
    {0x0137, "k"},
    {0x0139, "l"},
    {0x013A, "l"},
    {0x013B, "l"},
    {0x013C, "l"},
    {0x013D, "l"},
    {0x013E, "l"},
    {0x013F, "\xc5\x80"},
    {0x0141, "\xc5\x82"},
    {0x0143, "n"},
    {0x0144, "n"},
    {0x0145, "n"},
    {0x0146, "n"},
    {0x0147, "n"},
    {0x0148, "n"},
    {0x014A, "\xc5\x8b"},
    {0x014C, "o"},
    {0x014D, "o"},
    {0x014E, "o"},
    {0x014F, "o"},
    {0x0150, "o"},
    {0x0151, "o"},
    {0x0152, "\xc5\x93"},
    {0x0154, "r"},
    {0x0155, "r"},
    {0x0156, "r"},
    {0x0157, "r"},
    {0x0158, "r"},
    {0x0159, "r"},
    {0x015A, "s"},
    {0x015B, "s"},
    {0x015C, "s"},
    {0x015D, "s"},
    {0x015E, "s"},
    {0x015F, "s"},
    {0x0160, "s"},
    {0x0161, "s"},
    {0x0162, "t"},
    {0x0163, "t"},
    {0x0164, "t"},
    {0x0165, "t"},
    {0x0166, "\xc5\xa7"},
    {0x0168, "u"},
    {0x0169, "u"},
    {0x016A, "u"},
    {0x016B, "u"},
    {0x016C, "u"},
    {0x016D, "u"},
    {0x016E, "u"},
    {0x016F, "u"},
    {0x0170, "u"},
    {0x0171, "u"},
    {0x0172, "u"},
    {0x0173, "u"},
    {0x0174, "w"},
    {0x0175, "w"},
    {0x0176, "y"},
    {0x0177, "y"},
    {0x0178, "y"},
    {0x0179, "z"},
    {0x017A, "z"},
    {0x017B, "z"},
    {0x017C, "z"},
    {0x017D, "z"},
    {0x017E, "z"},
    {0x0181, "\xc9\x93"},
    {0x0182, "\xc6\x83"},
    {0x0184, "\xc6\x85"},
    {0x0186, "\xc9\x94"},
    {0x0187, "\xc6\x88"},
    {0x0189, "\xc9\x96"},
    {0x018A, "\xc9\x97"},
    {0x018B, "\xc6\x8c"},
    {0x018E, "\xc7\x9d"},
    {0x018F, "\xc9\x99"},
    {0x0190, "\xc9\x9b"},
    {0x0191, "\xc6\x92"},
    {0x0193, "\xc9\xa0"},
    {0x0194, "\xc9\xa3"},
    {0x0196, "\xc9\xa9"},
    {0x0197, "\xc9\xa8"},
    {0x0198, "\xc6\x99"},
    {0x019C, "\xc9\xaf"},
    {0x019D, "\xc9\xb2"},
    {0x019F, "\xc9\xb5"},
    {0x01A0, "o"},
    {0x01A1, "o"},
    {0x01A2, "\xc6\xa3"},
    {0x01A4, "\xc6\xa5"},
    {0x01A6, "\xca\x80"},
    {0x01A7, "\xc6\xa8"},
    {0x01A9, "\xca\x83"},
    {0x01AC, "\xc6\xad"},
    {0x01AE, "\xca\x88"},
    {0x01AF, "u"},
    {0x01B0, "u"},
    {0x01B1, "\xca\x8a"},
    {0x01B2, "\xca\x8b"},
    {0x01B3, "\xc6\xb4"},
    {0x01B5, "\xc6\xb6"},
    {0x01B7, "\xca\x92"},
    {0x01B8, "\xc6\xb9"},
    {0x01BC, "\xc6\xbd"},
    {0x01C4, "\xc7\x86"},
    {0x01C5, "\xc7\x86"},
    {0x01C7, "\xc7\x89"},
    {0x01C8, "\xc7\x89"},
    {0x01CA, "\xc7\x8c"},
    {0x01CB, "\xc7\x8c"},
    {0x01CD, "a"},
    {0x01CE, "a"},
    {0x01CF, "i"},
    {0x01D0, "i"},
    {0x01D1, "o"},
    {0x01D2, "o"},
    {0x01D3, "u"},
    {0x01D4, "u"},
    {0x01D5, "u"},
    {0x01D6, "u"},
    {0x01D7, "u"},
    {0x01D8, "u"},
    {0x01D9, "u"},
    {0x01DA, "u"},
    {0x01DB, "u"},
    {0x01DC, "u"},
    {0x01DE, "a"},
    {0x01DF, "a"},
    {0x01E0, "a"},
    {0x01E1, "a"},
    {0x01E2, "\xc3\xa6"},
    {0x01E3, "\xc3\xa6"},
    {0x01E4, "\xc7\xa5"},
    {0x01E6, "g"},
    {0x01E7, "g"},
    {0x01E8, "k"},
    {0x01E9, "k"},
    {0x01EA, "o"},
    {0x01EB, "o"},
    {0x01EC, "o"},
    {0x01ED, "o"},
    {0x01EE, "\xca\x92"},
    {0x01EF, "\xca\x92"},
    {0x01F0, "j"},
    {0x01F1, "\xc7\xb3"},
    {0x01F2, "\xc7\xb3"},
    {0x01F4, "g"},
    {0x01F5, "g"},
    {0x01F6, "\xc6\x95"},
    {0x01F7, "\xc6\xbf"},
    {0x01F8, "n"},
    {0x01F9, "n"},
    {0x01FA, "a"},
    {0x01FB, "a"},
    {0x01FC, "\xc3\xa6"},
    {0x01FD, "\xc3\xa6"},
    {0x01FE, "\xc3\xb8"},
    {0x01FF, "\xc3\xb8"},
    {0x0200, "a"},
    {0x0201, "a"},
    {0x0202, "a"},
    {0x0203, "a"},
    {0x0204, "e"},
    {0x0205, "e"},
    {0x0206, "e"},
    {0x0207, "e"},
    {0x0208, "i"},
    {0x0209, "i"},
    {0x020A, "i"},
    {0x020B, "i"},
    {0x020C, "o"},
    {0x020D, "o"},
    {0x020E, "o"},
    {0x020F, "o"},
    {0x0210, "r"},
    {0x0211, "r"},
    {0x0212, "r"},
    {0x0213, "r"},
    {0x0214, "u"},
    {0x0215, "u"},
    {0x0216, "u"},
    {0x0217, "u"},
    {0x0218, "s"},
    {0x0219, "s"},
    {0x021A, "t"},
    {0x021B, "t"},
    {0x021C, "\xc8\x9d"},
    {0x021E, "h"},
    {0x021F, "h"},
    {0x0220, "\xc6\x9e"},
    {0x0222, "\xc8\xa3"},
    {0x0224, "\xc8\xa5"},
    {0x0226, "a"},
    {0x0227, "a"},
    {0x0228, "e"},
    {0x0229, "e"},
    {0x022A, "o"},
    {0x022B, "o"},
    {0x022C, "o"},
    {0x022D, "o"},
    {0x022E, "o"},
    {0x022F, "o"},
    {0x0230, "o"},
    {0x0231, "o"},
    {0x0232, "y"},
    {0x0233, "y"},
    {0x023A, "\xe2\xb1\xa5"},
    {0x023B, "\xc8\xbc"},
    {0x023D, "\xc6\x9a"},
    {0x023E, "\xe2\xb1\xa6"},
    {0x0241, "\xc9\x82"},
    {0x0243, "\xc6\x80"},
    {0x0244, "\xca\x89"},
    {0x0245, "\xca\x8c"},
    {0x0246, "\xc9\x87"},
    {0x0248, "\xc9\x89"},
    {0x024A, "\xc9\x8b"},
    {0x024C, "\xc9\x8d"},
    {0x024E, "\xc9\x8f"},
    {0x0370, "\xcd\xb1"},
    {0x0372, "\xcd\xb3"},
    {0x0374, "\xca\xb9"},
    {0x0376, "\xcd\xb7"},
    {0x037E, ";"},
    {0x037F, "\xcf\xb3"},
    {0x0385, "\xc2\xa8"},
    {0x0386, "\xce\xb1"},
    {0x0387, "\xc2\xb7"},
    {0x0388, "\xce\xb5"},
    {0x0389, "\xce\xb7"},
    {0x038A, "\xce\xb9"},
    {0x038C, "\xce\xbf"},
    {0x038E, "\xcf\x85"},
    {0x038F, "\xcf\x89"},
    {0x0390, "\xce\xb9"},
    {0x0391, "\xce\xb1"},
    {0x0392, "\xce\xb2"},
    {0x0393, "\xce\xb3"},
    {0x0394, "\xce\xb4"},
    {0x0395, "\xce\xb5"},
    {0x0396, "\xce\xb6"},
    {0x0397, "\xce\xb7"},
    {0x0398, "\xce\xb8"},
    {0x0399, "\xce\xb9"},
    {0x039A, "\xce\xba"},
    {0x039B, "\xce\xbb"},
    {0x039C, "\xce\xbc"},
    {0x039D, "\xce\xbd"},
    {0x039E, "\xce\xbe"},
    {0x039F, "\xce\xbf"},
    {0x03A0, "\xcf\x80"},
    {0x03A1, "\xcf\x81"},
    {0x03A3, "\xcf\x83"},
    {0x03A4, "\xcf\x84"},
    {0x03A5, "\xcf\x85"},
    {0x03A6, "\xcf\x86"},
    {0x03A7, "\xcf\x87"},
    {0x03A8, "\xcf\x88"},
    {0x03A9, "\xcf\x89"},
    {0x03AA, "\xce\xb9"},
    {0x03AB, "\xcf\x85"},
    {0x03AC, "\xce\xb1"},
    {0x03AD, "\xce\xb5"},
    {0x03AE, "\xce\xb7"},
    {0x03AF, "\xce\xb9"},
    {0x03B0, "\xcf\x85"},
    {0x03CA, "\xce\xb9"},
    {0x03CB, "\xcf\x85"},
    {0x03CC, "\xce\xbf"},
    {0x03CD, "\xcf\x85"},
    {0x03CE, "\xcf\x89"},
    {0x03CF, "\xcf\x97"},
    {0x03D3, "\xcf\x92"},
    {0x03D4, "\xcf\x92"},
    {0x03D8, "\xcf\x99"},
    {0x03DA, "\xcf\x9b"},
    {0x03DC, "\xcf\x9d"},
    {0x03DE, "\xcf\x9f"},
    {0x03E0, "\xcf\xa1"},
    {0x03E2, "\xcf\xa3"},
    {0x03E4, "\xcf\xa5"},
    {0x03E6, "\xcf\xa7"},
    {0x03E8, "\xcf\xa9"},
    {0x03EA, "\xcf\xab"},
    {0x03EC, "\xcf\xad"},
    {0x03EE, "\xcf\xaf"},
    {0x03F4, "\xce\xb8"},
    {0x03F7, "\xcf\xb8"},
    {0x03F9, "\xcf\xb2"},
    {0x03FA, "\xcf\xbb"},
    {0x03FD, "\xcd\xbb"},
    {0x03FE, "\xcd\xbc"},
    {0x03FF, "\xcd\xbd"},
    {0x0400, "\xd0\xb5"},
    {0x0401, "\xd0\xb5"},
    {0x0402, "\xd1\x92"},
    {0x0403, "\xd0\xb3"},
    {0x0404, "\xd1\x94"},
    {0x0405, "\xd1\x95"},
    {0x0406, "\xd1\x96"},
    {0x0407, "\xd1\x96"},
    {0x0408, "\xd1\x98"},
    {0x0409, "\xd1\x99"},
    {0x040A, "\xd1\x9a"},
    {0x040B, "\xd1\x9b"},
    {0x040C, "\xd0\xba"},
    {0x040D, "\xd0\xb8"},
    {0x040E, "\xd1\x83"},
    {0x040F, "\xd1\x9f"},
    {0x0410, "\xd0\xb0"},
    {0x0411, "\xd0\xb1"},
    {0x0412, "\xd0\xb2"},
    {0x0413, "\xd0\xb3"},
    {0x0414, "\xd0\xb4"},
    {0x0415, "\xd0\xb5"},
    {0x0416, "\xd0\xb6"},
    {0x0417, "\xd0\xb7"},
    {0x0418, "\xd0\xb8"},
    {0x0419, "\xd0\xb8"},
    {0x041A, "\xd0\xba"},
    {0x041B, "\xd0\xbb"},
    {0x041C, "\xd0\xbc"},
    {0x041D, "\xd0\xbd"},
    {0x041E, "\xd0\xbe"},
    {0x041F, "\xd0\xbf"},
    {0x0420, "\xd1\x80"},
    {0x0421, "\xd1\x81"},
    {0x0422, "\xd1\x82"},
    {0x0423, "\xd1\x83"},
    {0x0424, "\xd1\x84"},
    {0x0425, "\xd1\x85"},
    {0x0426, "\xd1\x86"},
    {0x0427, "\xd1\x87"},
    {0x0428, "\xd1\x88"},
    {0x0429, "\xd1\x89"},
    {0x042A, "\xd1\x8a"},
    {0x042B, "\xd1\x8b"},
    {0x042C, "\xd1\x8c"},
    {0x042D, "\xd1\x8d"},
    {0x042E, "\xd1\x8e"},
    {0x042F, "\xd1\x8f"},
    {0x0439, "\xd0\xb8"},
    {0x0450, "\xd0\xb5"},
    {0x0451, "\xd0\xb5"},
    {0x0453, "\xd0\xb3"},
    {0x0457, "\xd1\x96"},
    {0x045C, "\xd0\xba"},
    {0x045D, "\xd0\xb8"},
    {0x045E, "\xd1\x83"},
    {0x0460, "\xd1\xa1"},
    {0x0462, "\xd1\xa3"},
    {0x0464, "\xd1\xa5"},
    {0x0466, "\xd1\xa7"},
    {0x0468, "\xd1\xa9"},
    {0x046A, "\xd1\xab"},
    {0x046C, "\xd1\xad"},
    {0x046E, "\xd1\xaf"},
    {0x0470, "\xd1\xb1"},
    {0x0472, "\xd1\xb3"},
    {0x0474, "\xd1\xb5"},
    {0x0476, "\xd1\xb5"},
    {0x0477, "\xd1\xb5"},
    {0x0478, "\xd1\xb9"},
    {0x047A, "\xd1\xbb"},
    {0x047C, "\xd1\xbd"},
    {0x047E, "\xd1\xbf"},
    {0x0480, "\xd2\x81"},
    {0x048A, "\xd2\x8b"},
    {0x048C, "\xd2\x8d"},
    {0x048E, "\xd2\x8f"},
    {0x0490, "\xd2\x91"},
    {0x0492, "\xd2\x93"},
    {0x0494, "\xd2\x95"},
    {0x0496, "\xd2\x97"},
    {0x0498, "\xd2\x99"},
    {0x049A, "\xd2\x9b"},
    {0x049C, "\xd2\x9d"},
    {0x049E, "\xd2\x9f"},
    {0x04A0, "\xd2\xa1"},
    {0x04A2, "\xd2\xa3"},
    {0x04A4, "\xd2\xa5"},
    {0x04A6, "\xd2\xa7"},
    {0x04A8, "\xd2\xa9"},
    {0x04AA, "\xd2\xab"},
    {0x04AC, "\xd2\xad"},
    {0x04AE, "\xd2\xaf"},
    {0x04B0, "\xd2\xb1"},
    {0x04B2, "\xd2\xb3"},
    {0x04B4, "\xd2\xb5"},
    {0x04B6, "\xd2\xb7"},
    {0x04B8, "\xd2\xb9"},
    {0x04BA, "\xd2\xbb"},
    {0x04BC, "\xd2\xbd"},
    {0x04BE, "\xd2\xbf"},
    {0x04C0, "\xd3\x8f"},
    {0x04C1, "\xd0\xb6"},
    {0x04C2, "\xd0\xb6"},
    {0x04C3, "\xd3\x84"},
    {0x04C5, "\xd3\x86"},
    {0x04C7, "\xd3\x88"},
    {0x04C9, "\xd3\x8a"},
    {0x04CB, "\xd3\x8c"},
    {0x04CD, "\xd3\x8e"},
    {0x04D0, "\xd0\xb0"},
    {0x04D1, "\xd0\xb0"},
    {0x04D2, "\xd0\xb0"},
    {0x04D3, "\xd0\xb0"},
    {0x04D4, "\xd3\x95"},
    {0x04D6, "\xd0\xb5"},
    {0x04D7, "\xd0\xb5"},
    {0x04D8, "\xd3\x99"},
    {0x04DA, "\xd3\x99"},
    {0x04DB, "\xd3\x99"},
    {0x04DC, "\xd0\xb6"},
    {0x04DD, "\xd0\xb6"},
    {0x04DE, "\xd0\xb7"},
    {0x04DF, "\xd0\xb7"},
    {0x04E0, "\xd3\xa1"},
    {0x04E2, "\xd0\xb8"},
    {0x04E3, "\xd0\xb8"},
    {0x04E4, "\xd0\xb8"},
    {0x04E5, "\xd0\xb8"},
    {0x04E6, "\xd0\xbe"},
    {0x04E7, "\xd0\xbe"},
    {0x04E8, "\xd3\xa9"},
    {0x04EA, "\xd3\xa9"},
    {0x04EB, "\xd3\xa9"},
    {0x04EC, "\xd1\x8d"},
    {0x04ED, "\xd1\x8d"},
    {0x04EE, "\xd1\x83"},
    {0x04EF, "\xd1\x83"},
    {0x04F0, "\xd1\x83"},
    {0x04F1, "\xd1\x83"},
    {0x04F2, "\xd1\x83"},
    {0x04F3, "\xd1\x83"},
    {0x04F4, "\xd1\x87"},
    {0x04F5, "\xd1\x87"},
    {0x04F6, "\xd3\xb7"},
    {0x04F8, "\xd1\x8b"},
    {0x04F9, "\xd1\x8b"},
    {0x04FA, "\xd3\xbb"},
    {0x04FC, "\xd3\xbd"},
    {0x04FE, "\xd3\xbf"},
    {0x0500, "\xd4\x81"},
    {0x0502, "\xd4\x83"},
    {0x0504, "\xd4\x85"},
    {0x0506, "\xd4\x87"},
    {0x0508, "\xd4\x89"},
    {0x050A, "\xd4\x8b"},
    {0x050C, "\xd4\x8d"},
    {0x050E, "\xd4\x8f"},
    {0x0510, "\xd4\x91"},
    {0x0512, "\xd4\x93"},
    {0x0514, "\xd4\x95"},
    {0x0516, "\xd4\x97"},
    {0x0518, "\xd4\x99"},
    {0x051A, "\xd4\x9b"},
    {0x051C, "\xd4\x9d"},
    {0x051E, "\xd4\x9f"},
    {0x0520, "\xd4\xa1"},
    {0x0522, "\xd4\xa3"},
    {0x0524, "\xd4\xa5"},
    {0x0526, "\xd4\xa7"},
    {0x0528, "\xd4\xa9"},
    {0x052A, "\xd4\xab"},
    {0x052C, "\xd4\xad"},
    {0x052E, "\xd4\xaf"},
};

}  // namespace aspectsim::models::unicode
