// Generated by scripts/gen_ucd_tables.py from UCD 13.0.0 data. Do not edit.

#include "scribe/ucd.hpp"

namespace scribe::ucd {

const ClassedRange kGcbRanges[] = {
    {0x0,0x9,Gcb::Control},{0xA,0xA,Gcb::LF},{0xB,0xC,Gcb::Control},{0xD,0xD,Gcb::CR},
    {0xE,0x1F,Gcb::Control},{0x7F,0x9F,Gcb::Control},{0xAD,0xAD,Gcb::Control},{0x300,0x36F,Gcb::Extend},
    {0x483,0x489,Gcb::Extend},{0x591,0x5BD,Gcb::Extend},{0x5BF,0x5BF,Gcb::Extend},{0x5C1,0x5C2,Gcb::Extend},
    {0x5C4,0x5C5,Gcb::Extend},{0x5C7,0x5C7,Gcb::Extend},{0x600,0x605,Gcb::Prepend},{0x610,0x61A,Gcb::Extend},
    {0x61C,0x61C,Gcb::Control},{0x64B,0x65F,Gcb::Extend},{0x670,0x670,Gcb::Extend},{0x6D6,0x6DC,Gcb::Extend},
    {0x6DD,0x6DD,Gcb::Prepend},{0x6DF,0x6E4,Gcb::Extend},{0x6E7,0x6E8,Gcb::Extend},{0x6EA,0x6ED,Gcb::Extend},
    {0x70F,0x70F,Gcb::Prepend},{0x711,0x711,Gcb::Extend},{0x730,0x74A,Gcb::Extend},{0x7A6,0x7B0,Gcb::Extend},
    {0x7EB,0x7F3,Gcb::Extend},{0x7FD,0x7FD,Gcb::Extend},{0x816,0x819,Gcb::Extend},{0x81B,0x823,Gcb::Extend},
    {0x825,0x827,Gcb::Extend},{0x829,0x82D,Gcb::Extend},{0x859,0x85B,Gcb::Extend},{0x8D3,0x8E1,Gcb::Extend},
    {0x8E2,0x8E2,Gcb::Prepend},{0x8E3,0x902,Gcb::Extend},{0x903,0x903,Gcb::SpacingMark},{0x93A,0x93A,Gcb::Extend},
    {0x93B,0x93B,Gcb::SpacingMark},{0x93C,0x93C,Gcb::Extend},{0x93E,0x940,Gcb::SpacingMark},{0x941,0x948,Gcb::Extend},
    {0x949,0x94C,Gcb::SpacingMark},{0x94D,0x94D,Gcb::Extend},{0x94E,0x94F,Gcb::SpacingMark},{0x951,0x957,Gcb::Extend},
    {0x962,0x963,Gcb::Extend},{0x981,0x981,Gcb::Extend},{0x982,0x983,Gcb::SpacingMark},{0x9BC,0x9BC,Gcb::Extend},
    {0x9BE,0x9BE,Gcb::Extend},{0x9BF,0x9C0,Gcb::SpacingMark},{0x9C1,0x9C4,Gcb::Extend},{0x9C7,0x9C8,Gcb::SpacingMark},
    {0x9CB,0x9CC,Gcb::SpacingMark},{0x9CD,0x9CD,Gcb::Extend},{0x9D7,0x9D7,Gcb::Extend},{0x9E2,0x9E3,Gcb::Extend},
    {0x9FE,0x9FE,Gcb::Extend},{0xA01,0xA02,Gcb::Extend},{0xA03,0xA03,Gcb::SpacingMark},{0xA3C,0xA3C,Gcb::Extend},
    {0xA3E,0xA40,Gcb::SpacingMark},{0xA41,0xA42,Gcb::Extend},{0xA47,0xA48,Gcb::Extend},{0xA4B,0xA4D,Gcb::Extend},
    {0xA51,0xA51,Gcb::Extend},{0xA70,0xA71,Gcb::Extend},{0xA75,0xA75,Gcb::Extend},{0xA81,0xA82,Gcb::Extend},
    {0xA83,0xA83,Gcb::SpacingMark},{0xABC,0xABC,Gcb::Extend},{0xABE,0xAC0,Gcb::SpacingMark},{0xAC1,0xAC5,Gcb::Extend},
    {0xAC7,0xAC8,Gcb::Extend},{0xAC9,0xAC9,Gcb::SpacingMark},{0xACB,0xACC,Gcb::SpacingMark},{0xACD,0xACD,Gcb::Extend},
    {0xAE2,0xAE3,Gcb::Extend},{0xAFA,0xAFF,Gcb::Extend},{0xB01,0xB01,Gcb::Extend},{0xB02,0xB03,Gcb::SpacingMark},
    {0xB3C,0xB3C,Gcb::Extend},{0xB3E,0xB3F,Gcb::Extend},{0xB40,0xB40,Gcb::SpacingMark},{0xB41,0xB44,Gcb::Extend},
    {0xB47,0xB48,Gcb::SpacingMark},{0xB4B,0xB4C,Gcb::SpacingMark},{0xB4D,0xB4D,Gcb::Extend},{0xB55,0xB57,Gcb::Extend},
    {0xB62,0xB63,Gcb::Extend},{0xB82,0xB82,Gcb::Extend},{0xBBE,0xBBE,Gcb::Extend},{0xBBF,0xBBF,Gcb::SpacingMark},
    {0xBC0,0xBC0,Gcb::Extend},{0xBC1,0xBC2,Gcb::SpacingMark},{0xBC6,0xBC8,Gcb::SpacingMark},{0xBCA,0xBCC,Gcb::SpacingMark},
    {0xBCD,0xBCD,Gcb::Extend},{0xBD7,0xBD7,Gcb::Extend},{0xC00,0xC00,Gcb::Extend},{0xC01,0xC03,Gcb::SpacingMark},
    {0xC04,0xC04,Gcb::Extend},{0xC3E,0xC40,Gcb::Extend},{0xC41,0xC44,Gcb::SpacingMark},{0xC46,0xC48,Gcb::Extend},
    {0xC4A,0xC4D,Gcb::Extend},{0xC55,0xC56,Gcb::Extend},{0xC62,0xC63,Gcb::Extend},{0xC81,0xC81,Gcb::Extend},
    {0xC82,0xC83,Gcb::SpacingMark},{0xCBC,0xCBC,Gcb::Extend},{0xCBE,0xCBE,Gcb::SpacingMark},{0xCBF,0xCBF,Gcb::Extend},
    {0xCC0,0xCC1,Gcb::SpacingMark},{0xCC2,0xCC2,Gcb::Extend},{0xCC3,0xCC4,Gcb::SpacingMark},{0xCC6,0xCC6,Gcb::Extend},
    {0xCC7,0xCC8,Gcb::SpacingMark},{0xCCA,0xCCB,Gcb::SpacingMark},{0xCCC,0xCCD,Gcb::Extend},{0xCD5,0xCD6,Gcb::Extend},
    {0xCE2,0xCE3,Gcb::Extend},{0xD00,0xD01,Gcb::Extend},{0xD02,0xD03,Gcb::SpacingMark},{0xD3B,0xD3C,Gcb::Extend},
    {0xD3E,0xD3E,Gcb::Extend},{0xD3F,0xD40,Gcb::SpacingMark},{0xD41,0xD44,Gcb::Extend},{0xD46,0xD48,Gcb::SpacingMark},
    {0xD4A,0xD4C,Gcb::SpacingMark},{0xD4D,0xD4D,Gcb::Extend},{0xD4E,0xD4E,Gcb::Prepend},{0xD57,0xD57,Gcb::Extend},
    {0xD62,0xD63,Gcb::Extend},{0xD81,0xD81,Gcb::Extend},{0xD82,0xD83,Gcb::SpacingMark},{0xDCA,0xDCA,Gcb::Extend},
    {0xDCF,0xDCF,Gcb::Extend},{0xDD0,0xDD1,Gcb::SpacingMark},{0xDD2,0xDD4,Gcb::Extend},{0xDD6,0xDD6,Gcb::Extend},
    {0xDD8,0xDDE,Gcb::SpacingMark},{0xDDF,0xDDF,Gcb::Extend},{0xDF2,0xDF3,Gcb::SpacingMark},{0xE31,0xE31,Gcb::Extend},
    {0xE33,0xE33,Gcb::SpacingMark},{0xE34,0xE3A,Gcb::Extend},{0xE47,0xE4E,Gcb::Extend},{0xEB1,0xEB1,Gcb::Extend},
    {0xEB3,0xEB3,Gcb::SpacingMark},{0xEB4,0xEBC,Gcb::Extend},{0xEC8,0xECD,Gcb::Extend},{0xF18,0xF19,Gcb::Extend},
    {0xF35,0xF35,Gcb::Extend},{0xF37,0xF37,Gcb::Extend},{0xF39,0xF39,Gcb::Extend},{0xF3E,0xF3F,Gcb::SpacingMark},
    {0xF71,0xF7E,Gcb::Extend},{0xF7F,0xF7F,Gcb::SpacingMark},{0xF80,0xF84,Gcb::Extend},{0xF86,0xF87,Gcb::Extend},
    {0xF8D,0xF97,Gcb::Extend},{0xF99,0xFBC,Gcb::Extend},{0xFC6,0xFC6,Gcb::Extend},{0x102D,0x1030,Gcb::Extend},
    {0x1031,0x1031,Gcb::SpacingMark},{0x1032,0x1037,Gcb::Extend},{0x1039,0x103A,Gcb::Extend},{0x103B,0x103C,Gcb::SpacingMark},
    {0x103D,0x103E,Gcb::Extend},{0x1056,0x1057,Gcb::SpacingMark},{0x1058,0x1059,Gcb::Extend},{0x105E,0x1060,Gcb::Extend},
    {0x1071,0x1074,Gcb::Extend},{0x1082,0x1082,Gcb::Extend},{0x1084,0x1084,Gcb::SpacingMark},{0x1085,0x1086,Gcb::Extend},
    {0x108D,0x108D,Gcb::Extend},{0x109D,0x109D,Gcb::Extend},{0x1100,0x115F,Gcb::HangulL},{0x1160,0x11A7,Gcb::HangulV},
    {0x11A8,0x11FF,Gcb::HangulT},{0x135D,0x135F,Gcb::Extend},{0x1712,0x1714,Gcb::Extend},{0x1732,0x1734,Gcb::Extend},
    {0x1752,0x1753,Gcb::Extend},{0x1772,0x1773,Gcb::Extend},{0x17B4,0x17B5,Gcb::Extend},{0x17B6,0x17B6,Gcb::SpacingMark},
    {0x17B7,0x17BD,Gcb::Extend},{0x17BE,0x17C5,Gcb::SpacingMark},{0x17C6,0x17C6,Gcb::Extend},{0x17C7,0x17C8,Gcb::SpacingMark},
    {0x17C9,0x17D3,Gcb::Extend},{0x17DD,0x17DD,Gcb::Extend},{0x180B,0x180D,Gcb::Extend},{0x180E,0x180E,Gcb::Control},
    {0x1885,0x1886,Gcb::Extend},{0x18A9,0x18A9,Gcb::Extend},{0x1920,0x1922,Gcb::Extend},{0x1923,0x1926,Gcb::SpacingMark},
    {0x1927,0x1928,Gcb::Extend},{0x1929,0x192B,Gcb::SpacingMark},{0x1930,0x1931,Gcb::SpacingMark},{0x1932,0x1932,Gcb::Extend},
    {0x1933,0x1938,Gcb::SpacingMark},{0x1939,0x193B,Gcb::Extend},{0x1A17,0x1A18,Gcb::Extend},{0x1A19,0x1A1A,Gcb::SpacingMark},
    {0x1A1B,0x1A1B,Gcb::Extend},{0x1A55,0x1A55,Gcb::SpacingMark},{0x1A56,0x1A56,Gcb::Extend},{0x1A57,0x1A57,Gcb::SpacingMark},
    {0x1A58,0x1A5E,Gcb::Extend},{0x1A60,0x1A60,Gcb::Extend},{0x1A62,0x1A62,Gcb::Extend},{0x1A65,0x1A6C,Gcb::Extend},
    {0x1A6D,0x1A72,Gcb::SpacingMark},{0x1A73,0x1A7C,Gcb::Extend},{0x1A7F,0x1A7F,Gcb::Extend},{0x1AB0,0x1AC0,Gcb::Extend},
    {0x1B00,0x1B03,Gcb::Extend},{0x1B04,0x1B04,Gcb::SpacingMark},{0x1B34,0x1B3A,Gcb::Extend},{0x1B3B,0x1B3B,Gcb::SpacingMark},
    {0x1B3C,0x1B3C,Gcb::Extend},{0x1B3D,0x1B41,Gcb::SpacingMark},{0x1B42,0x1B42,Gcb::Extend},{0x1B43,0x1B44,Gcb::SpacingMark},
    {0x1B6B,0x1B73,Gcb::Extend},{0x1B80,0x1B81,Gcb::Extend},{0x1B82,0x1B82,Gcb::SpacingMark},{0x1BA1,0x1BA1,Gcb::SpacingMark},
    {0x1BA2,0x1BA5,Gcb::Extend},{0x1BA6,0x1BA7,Gcb::SpacingMark},{0x1BA8,0x1BA9,Gcb::Extend},{0x1BAA,0x1BAA,Gcb::SpacingMark},
    {0x1BAB,0x1BAD,Gcb::Extend},{0x1BE6,0x1BE6,Gcb::Extend},{0x1BE7,0x1BE7,Gcb::SpacingMark},{0x1BE8,0x1BE9,Gcb::Extend},
    {0x1BEA,0x1BEC,Gcb::SpacingMark},{0x1BED,0x1BED,Gcb::Extend},{0x1BEE,0x1BEE,Gcb::SpacingMark},{0x1BEF,0x1BF1,Gcb::Extend},
    {0x1BF2,0x1BF3,Gcb::SpacingMark},{0x1C24,0x1C2B,Gcb::SpacingMark},{0x1C2C,0x1C33,Gcb::Extend},{0x1C34,0x1C35,Gcb::SpacingMark},
    {0x1C36,0x1C37,Gcb::Extend},{0x1CD0,0x1CD2,Gcb::Extend},{0x1CD4,0x1CE0,Gcb::Extend},{0x1CE1,0x1CE1,Gcb::SpacingMark},
    {0x1CE2,0x1CE8,Gcb::Extend},{0x1CED,0x1CED,Gcb::Extend},{0x1CF4,0x1CF4,Gcb::Extend},{0x1CF7,0x1CF7,Gcb::SpacingMark},
    {0x1CF8,0x1CF9,Gcb::Extend},{0x1DC0,0x1DF9,Gcb::Extend},{0x1DFB,0x1DFF,Gcb::Extend},{0x200B,0x200B,Gcb::Control},
    {0x200C,0x200C,Gcb::Extend},{0x200D,0x200D,Gcb::ZWJ},{0x200E,0x200F,Gcb::Control},{0x2028,0x202E,Gcb::Control},
    {0x2060,0x2064,Gcb::Control},{0x2066,0x206F,Gcb::Control},{0x20D0,0x20F0,Gcb::Extend},{0x2CEF,0x2CF1,Gcb::Extend},
    {0x2D7F,0x2D7F,Gcb::Extend},{0x2DE0,0x2DFF,Gcb::Extend},{0x302A,0x302F,Gcb::Extend},{0x3099,0x309A,Gcb::Extend},
    {0xA66F,0xA672,Gcb::Extend},{0xA674,0xA67D,Gcb::Extend},{0xA69E,0xA69F,Gcb::Extend},{0xA6F0,0xA6F1,Gcb::Extend},
    {0xA802,0xA802,Gcb::Extend},{0xA806,0xA806,Gcb::Extend},{0xA80B,0xA80B,Gcb::Extend},{0xA823,0xA824,Gcb::SpacingMark},
    {0xA825,0xA826,Gcb::Extend},{0xA827,0xA827,Gcb::SpacingMark},{0xA82C,0xA82C,Gcb::Extend},{0xA880,0xA881,Gcb::SpacingMark},
    {0xA8B4,0xA8C3,Gcb::SpacingMark},{0xA8C4,0xA8C5,Gcb::Extend},{0xA8E0,0xA8F1,Gcb::Extend},{0xA8FF,0xA8FF,Gcb::Extend},
    {0xA926,0xA92D,Gcb::Extend},{0xA947,0xA951,Gcb::Extend},{0xA952,0xA953,Gcb::SpacingMark},{0xA960,0xA97C,Gcb::HangulL},
    {0xA980,0xA982,Gcb::Extend},{0xA983,0xA983,Gcb::SpacingMark},{0xA9B3,0xA9B3,Gcb::Extend},{0xA9B4,0xA9B5,Gcb::SpacingMark},
    {0xA9B6,0xA9B9,Gcb::Extend},{0xA9BA,0xA9BB,Gcb::SpacingMark},{0xA9BC,0xA9BD,Gcb::Extend},{0xA9BE,0xA9C0,Gcb::SpacingMark},
    {0xA9E5,0xA9E5,Gcb::Extend},{0xAA29,0xAA2E,Gcb::Extend},{0xAA2F,0xAA30,Gcb::SpacingMark},{0xAA31,0xAA32,Gcb::Extend},
    {0xAA33,0xAA34,Gcb::SpacingMark},{0xAA35,0xAA36,Gcb::Extend},{0xAA43,0xAA43,Gcb::Extend},{0xAA4C,0xAA4C,Gcb::Extend},
    {0xAA4D,0xAA4D,Gcb::SpacingMark},{0xAA7C,0xAA7C,Gcb::Extend},{0xAAB0,0xAAB0,Gcb::Extend},{0xAAB2,0xAAB4,Gcb::Extend},
    {0xAAB7,0xAAB8,Gcb::Extend},{0xAABE,0xAABF,Gcb::Extend},{0xAAC1,0xAAC1,Gcb::Extend},{0xAAEB,0xAAEB,Gcb::SpacingMark},
    {0xAAEC,0xAAED,Gcb::Extend},{0xAAEE,0xAAEF,Gcb::SpacingMark},{0xAAF5,0xAAF5,Gcb::SpacingMark},{0xAAF6,0xAAF6,Gcb::Extend},
    {0xABE3,0xABE4,Gcb::SpacingMark},{0xABE5,0xABE5,Gcb::Extend},{0xABE6,0xABE7,Gcb::SpacingMark},{0xABE8,0xABE8,Gcb::Extend},
    {0xABE9,0xABEA,Gcb::SpacingMark},{0xABEC,0xABEC,Gcb::SpacingMark},{0xABED,0xABED,Gcb::Extend},{0xD7B0,0xD7C6,Gcb::HangulV},
    {0xD7CB,0xD7FB,Gcb::HangulT},{0xFB1E,0xFB1E,Gcb::Extend},{0xFE00,0xFE0F,Gcb::Extend},{0xFE20,0xFE2F,Gcb::Extend},
    {0xFEFF,0xFEFF,Gcb::Control},{0xFF9E,0xFF9F,Gcb::Extend},{0xFFF9,0xFFFB,Gcb::Control},{0x101FD,0x101FD,Gcb::Extend},
    {0x102E0,0x102E0,Gcb::Extend},{0x10376,0x1037A,Gcb::Extend},{0x10A01,0x10A03,Gcb::Extend},{0x10A05,0x10A06,Gcb::Extend},
    {0x10A0C,0x10A0F,Gcb::Extend},{0x10A38,0x10A3A,Gcb::Extend},{0x10A3F,0x10A3F,Gcb::Extend},{0x10AE5,0x10AE6,Gcb::Extend},
    {0x10D24,0x10D27,Gcb::Extend},{0x10EAB,0x10EAC,Gcb::Extend},{0x10F46,0x10F50,Gcb::Extend},{0x11000,0x11000,Gcb::SpacingMark},
    {0x11001,0x11001,Gcb::Extend},{0x11002,0x11002,Gcb::SpacingMark},{0x11038,0x11046,Gcb::Extend},{0x1107F,0x11081,Gcb::Extend},
    {0x11082,0x11082,Gcb::SpacingMark},{0x110B0,0x110B2,Gcb::SpacingMark},{0x110B3,0x110B6,Gcb::Extend},{0x110B7,0x110B8,Gcb::SpacingMark},
    {0x110B9,0x110BA,Gcb::Extend},{0x110BD,0x110BD,Gcb::Prepend},{0x110CD,0x110CD,Gcb::Prepend},{0x11100,0x11102,Gcb::Extend},
    {0x11127,0x1112B,Gcb::Extend},{0x1112C,0x1112C,Gcb::SpacingMark},{0x1112D,0x11134,Gcb::Extend},{0x11145,0x11146,Gcb::SpacingMark},
    {0x11173,0x11173,Gcb::Extend},{0x11180,0x11181,Gcb::Extend},{0x11182,0x11182,Gcb::SpacingMark},{0x111B3,0x111B5,Gcb::SpacingMark},
    {0x111B6,0x111BE,Gcb::Extend},{0x111BF,0x111C0,Gcb::SpacingMark},{0x111C2,0x111C3,Gcb::Prepend},{0x111C9,0x111CC,Gcb::Extend},
    {0x111CE,0x111CE,Gcb::SpacingMark},{0x111CF,0x111CF,Gcb::Extend},{0x1122C,0x1122E,Gcb::SpacingMark},{0x1122F,0x11231,Gcb::Extend},
    {0x11232,0x11233,Gcb::SpacingMark},{0x11234,0x11234,Gcb::Extend},{0x11235,0x11235,Gcb::SpacingMark},{0x11236,0x11237,Gcb::Extend},
    {0x1123E,0x1123E,Gcb::Extend},{0x112DF,0x112DF,Gcb::Extend},{0x112E0,0x112E2,Gcb::SpacingMark},{0x112E3,0x112EA,Gcb::Extend},
    {0x11300,0x11301,Gcb::Extend},{0x11302,0x11303,Gcb::SpacingMark},{0x1133B,0x1133C,Gcb::Extend},{0x1133E,0x1133E,Gcb::Extend},
    {0x1133F,0x1133F,Gcb::SpacingMark},{0x11340,0x11340,Gcb::Extend},{0x11341,0x11344,Gcb::SpacingMark},{0x11347,0x11348,Gcb::SpacingMark},
    {0x1134B,0x1134D,Gcb::SpacingMark},{0x11357,0x11357,Gcb::Extend},{0x11362,0x11363,Gcb::SpacingMark},{0x11366,0x1136C,Gcb::Extend},
    {0x11370,0x11374,Gcb::Extend},{0x11435,0x11437,Gcb::SpacingMark},{0x11438,0x1143F,Gcb::Extend},{0x11440,0x11441,Gcb::SpacingMark},
    {0x11442,0x11444,Gcb::Extend},{0x11445,0x11445,Gcb::SpacingMark},{0x11446,0x11446,Gcb::Extend},{0x1145E,0x1145E,Gcb::Extend},
    {0x114B0,0x114B0,Gcb::Extend},{0x114B1,0x114B2,Gcb::SpacingMark},{0x114B3,0x114B8,Gcb::Extend},{0x114B9,0x114B9,Gcb::SpacingMark},
    {0x114BA,0x114BA,Gcb::Extend},{0x114BB,0x114BC,Gcb::SpacingMark},{0x114BD,0x114BD,Gcb::Extend},{0x114BE,0x114BE,Gcb::SpacingMark},
    {0x114BF,0x114C0,Gcb::Extend},{0x114C1,0x114C1,Gcb::SpacingMark},{0x114C2,0x114C3,Gcb::Extend},{0x115AF,0x115AF,Gcb::Extend},
    {0x115B0,0x115B1,Gcb::SpacingMark},{0x115B2,0x115B5,Gcb::Extend},{0x115B8,0x115BB,Gcb::SpacingMark},{0x115BC,0x115BD,Gcb::Extend},
    {0x115BE,0x115BE,Gcb::SpacingMark},{0x115BF,0x115C0,Gcb::Extend},{0x115DC,0x115DD,Gcb::Extend},{0x11630,0x11632,Gcb::SpacingMark},
    {0x11633,0x1163A,Gcb::Extend},{0x1163B,0x1163C,Gcb::SpacingMark},{0x1163D,0x1163D,Gcb::Extend},{0x1163E,0x1163E,Gcb::SpacingMark},
    {0x1163F,0x11640,Gcb::Extend},{0x116AB,0x116AB,Gcb::Extend},{0x116AC,0x116AC,Gcb::SpacingMark},{0x116AD,0x116AD,Gcb::Extend},
    {0x116AE,0x116AF,Gcb::SpacingMark},{0x116B0,0x116B5,Gcb::Extend},{0x116B6,0x116B6,Gcb::SpacingMark},{0x116B7,0x116B7,Gcb::Extend},
    {0x1171D,0x1171F,Gcb::Extend},{0x11722,0x11725,Gcb::Extend},{0x11726,0x11726,Gcb::SpacingMark},{0x11727,0x1172B,Gcb::Extend},
    {0x1182C,0x1182E,Gcb::SpacingMark},{0x1182F,0x11837,Gcb::Extend},{0x11838,0x11838,Gcb::SpacingMark},{0x11839,0x1183A,Gcb::Extend},
    {0x11930,0x11930,Gcb::Extend},{0x11931,0x11935,Gcb::SpacingMark},{0x11937,0x11938,Gcb::SpacingMark},{0x1193B,0x1193C,Gcb::Extend},
    {0x1193D,0x1193D,Gcb::SpacingMark},{0x1193E,0x1193E,Gcb::Extend},{0x1193F,0x1193F,Gcb::Prepend},{0x11940,0x11940,Gcb::SpacingMark},
    {0x11941,0x11941,Gcb::Prepend},{0x11942,0x11942,Gcb::SpacingMark},{0x11943,0x11943,Gcb::Extend},{0x119D1,0x119D3,Gcb::SpacingMark},
    {0x119D4,0x119D7,Gcb::Extend},{0x119DA,0x119DB,Gcb::Extend},{0x119DC,0x119DF,Gcb::SpacingMark},{0x119E0,0x119E0,Gcb::Extend},
    {0x119E4,0x119E4,Gcb::SpacingMark},{0x11A01,0x11A0A,Gcb::Extend},{0x11A33,0x11A38,Gcb::Extend},{0x11A39,0x11A39,Gcb::SpacingMark},
    {0x11A3A,0x11A3A,Gcb::Prepend},{0x11A3B,0x11A3E,Gcb::Extend},{0x11A47,0x11A47,Gcb::Extend},{0x11A51,0x11A56,Gcb::Extend},
    {0x11A57,0x11A58,Gcb::SpacingMark},{0x11A59,0x11A5B,Gcb::Extend},{0x11A84,0x11A89,Gcb::Prepend},{0x11A8A,0x11A96,Gcb::Extend},
    {0x11A97,0x11A97,Gcb::SpacingMark},{0x11A98,0x11A99,Gcb::Extend},{0x11C2F,0x11C2F,Gcb::SpacingMark},{0x11C30,0x11C36,Gcb::Extend},
    {0x11C38,0x11C3D,Gcb::Extend},{0x11C3E,0x11C3E,Gcb::SpacingMark},{0x11C3F,0x11C3F,Gcb::Extend},{0x11C92,0x11CA7,Gcb::Extend},
    {0x11CA9,0x11CA9,Gcb::SpacingMark},{0x11CAA,0x11CB0,Gcb::Extend},{0x11CB1,0x11CB1,Gcb::SpacingMark},{0x11CB2,0x11CB3,Gcb::Extend},
    {0x11CB4,0x11CB4,Gcb::SpacingMark},{0x11CB5,0x11CB6,Gcb::Extend},{0x11D31,0x11D36,Gcb::Extend},{0x11D3A,0x11D3A,Gcb::Extend},
    {0x11D3C,0x11D3D,Gcb::Extend},{0x11D3F,0x11D45,Gcb::Extend},{0x11D46,0x11D46,Gcb::Prepend},{0x11D47,0x11D47,Gcb::Extend},
    {0x11D8A,0x11D8E,Gcb::SpacingMark},{0x11D90,0x11D91,Gcb::Extend},{0x11D93,0x11D94,Gcb::SpacingMark},{0x11D95,0x11D95,Gcb::Extend},
    {0x11D96,0x11D96,Gcb::SpacingMark},{0x11D97,0x11D97,Gcb::Extend},{0x11EF3,0x11EF4,Gcb::Extend},{0x11EF5,0x11EF6,Gcb::SpacingMark},
    {0x13430,0x13438,Gcb::Control},{0x16AF0,0x16AF4,Gcb::Extend},{0x16B30,0x16B36,Gcb::Extend},{0x16F4F,0x16F4F,Gcb::Extend},
    {0x16F51,0x16F87,Gcb::SpacingMark},{0x16F8F,0x16F92,Gcb::Extend},{0x16FE4,0x16FE4,Gcb::Extend},{0x16FF0,0x16FF1,Gcb::SpacingMark},
    {0x1BC9D,0x1BC9E,Gcb::Extend},{0x1BCA0,0x1BCA3,Gcb::Control},{0x1D165,0x1D165,Gcb::Extend},{0x1D166,0x1D166,Gcb::SpacingMark},
    {0x1D167,0x1D169,Gcb::Extend},{0x1D16D,0x1D16D,Gcb::SpacingMark},{0x1D16E,0x1D172,Gcb::Extend},{0x1D173,0x1D17A,Gcb::Control},
    {0x1D17B,0x1D182,Gcb::Extend},{0x1D185,0x1D18B,Gcb::Extend},{0x1D1AA,0x1D1AD,Gcb::Extend},{0x1D242,0x1D244,Gcb::Extend},
    {0x1DA00,0x1DA36,Gcb::Extend},{0x1DA3B,0x1DA6C,Gcb::Extend},{0x1DA75,0x1DA75,Gcb::Extend},{0x1DA84,0x1DA84,Gcb::Extend},
    {0x1DA9B,0x1DA9F,Gcb::Extend},{0x1DAA1,0x1DAAF,Gcb::Extend},{0x1E000,0x1E006,Gcb::Extend},{0x1E008,0x1E018,Gcb::Extend},
    {0x1E01B,0x1E021,Gcb::Extend},{0x1E023,0x1E024,Gcb::Extend},{0x1E026,0x1E02A,Gcb::Extend},{0x1E130,0x1E136,Gcb::Extend},
    {0x1E2EC,0x1E2EF,Gcb::Extend},{0x1E8D0,0x1E8D6,Gcb::Extend},{0x1E944,0x1E94A,Gcb::Extend},{0x1F1E6,0x1F1FF,Gcb::RegionalIndicator},
    {0x1F3FB,0x1F3FF,Gcb::Extend},{0xE0001,0xE0001,Gcb::Control},{0xE0020,0xE007F,Gcb::Extend},{0xE0100,0xE01EF,Gcb::Extend},
};
const std::size_t kGcbRanges_len = sizeof(kGcbRanges) / sizeof(ClassedRange);

const CpRange kExtPict[] = {
    {0xA9,0xA9},{0xAE,0xAE},{0x203C,0x203C},{0x2049,0x2049},{0x2122,0x2122},{0x2139,0x2139},
    {0x2194,0x2199},{0x21A9,0x21AA},{0x231A,0x231B},{0x2328,0x2328},{0x2388,0x2388},{0x23CF,0x23CF},
    {0x23E9,0x23F3},{0x23F8,0x23FA},{0x24C2,0x24C2},{0x25AA,0x25AB},{0x25B6,0x25B6},{0x25C0,0x25C0},
    {0x25FB,0x25FE},{0x2600,0x2605},{0x2607,0x2612},{0x2614,0x2685},{0x2690,0x2705},{0x2708,0x2712},
    {0x2714,0x2714},{0x2716,0x2716},{0x271D,0x271D},{0x2721,0x2721},{0x2728,0x2728},{0x2733,0x2734},
    {0x2744,0x2744},{0x2747,0x2747},{0x274C,0x274C},{0x274E,0x274E},{0x2753,0x2755},{0x2757,0x2757},
    {0x2763,0x2767},{0x2795,0x2797},{0x27A1,0x27A1},{0x27B0,0x27B0},{0x27BF,0x27BF},{0x2934,0x2935},
    {0x2B05,0x2B07},{0x2B1B,0x2B1C},{0x2B50,0x2B50},{0x2B55,0x2B55},{0x3030,0x3030},{0x303D,0x303D},
    {0x3297,0x3297},{0x3299,0x3299},{0x1F000,0x1F0FF},{0x1F10D,0x1F10F},{0x1F12F,0x1F12F},{0x1F16C,0x1F171},
    {0x1F17E,0x1F17F},{0x1F18E,0x1F18E},{0x1F191,0x1F19A},{0x1F1AD,0x1F1E5},{0x1F201,0x1F20F},{0x1F21A,0x1F21A},
    {0x1F22F,0x1F22F},{0x1F232,0x1F23A},{0x1F23C,0x1F23F},{0x1F249,0x1F3FA},{0x1F400,0x1F53D},{0x1F546,0x1F64F},
    {0x1F680,0x1F6FF},{0x1F774,0x1F77F},{0x1F7D5,0x1F7FF},{0x1F80C,0x1F80F},{0x1F848,0x1F84F},{0x1F85A,0x1F85F},
    {0x1F888,0x1F88F},{0x1F8AE,0x1F8FF},{0x1F90C,0x1F93A},{0x1F93C,0x1F945},{0x1F947,0x1FAFF},{0x1FC00,0x1FFFD},
};
const std::size_t kExtPict_len = sizeof(kExtPict) / sizeof(CpRange);

const CpRange kPunctuation[] = {
    {0x21,0x23},{0x25,0x2A},{0x2C,0x2F},{0x3A,0x3B},{0x3F,0x40},{0x5B,0x5D},
    {0x5F,0x5F},{0x7B,0x7B},{0x7D,0x7D},{0xA1,0xA1},{0xA7,0xA7},{0xAB,0xAB},
    {0xB6,0xB7},{0xBB,0xBB},{0xBF,0xBF},{0x37E,0x37E},{0x387,0x387},{0x55A,0x55F},
    {0x589,0x58A},{0x5BE,0x5BE},{0x5C0,0x5C0},{0x5C3,0x5C3},{0x5C6,0x5C6},{0x5F3,0x5F4},
    {0x609,0x60A},{0x60C,0x60D},{0x61B,0x61B},{0x61E,0x61F},{0x66A,0x66D},{0x6D4,0x6D4},
    {0x700,0x70D},{0x7F7,0x7F9},{0x830,0x83E},{0x85E,0x85E},{0x964,0x965},{0x970,0x970},
    {0x9FD,0x9FD},{0xA76,0xA76},{0xAF0,0xAF0},{0xC77,0xC77},{0xC84,0xC84},{0xDF4,0xDF4},
    {0xE4F,0xE4F},{0xE5A,0xE5B},{0xF04,0xF12},{0xF14,0xF14},{0xF3A,0xF3D},{0xF85,0xF85},
    {0xFD0,0xFD4},{0xFD9,0xFDA},{0x104A,0x104F},{0x10FB,0x10FB},{0x1360,0x1368},{0x1400,0x1400},
    {0x166E,0x166E},{0x169B,0x169C},{0x16EB,0x16ED},{0x1735,0x1736},{0x17D4,0x17D6},{0x17D8,0x17DA},
    {0x1800,0x180A},{0x1944,0x1945},{0x1A1E,0x1A1F},{0x1AA0,0x1AA6},{0x1AA8,0x1AAD},{0x1B5A,0x1B60},
    {0x1BFC,0x1BFF},{0x1C3B,0x1C3F},{0x1C7E,0x1C7F},{0x1CC0,0x1CC7},{0x1CD3,0x1CD3},{0x2010,0x2027},
    {0x2030,0x2043},{0x2045,0x2051},{0x2053,0x205E},{0x207D,0x207E},{0x208D,0x208E},{0x2308,0x230B},
    {0x2329,0x232A},{0x2768,0x2775},{0x27C5,0x27C6},{0x27E6,0x27EF},{0x2983,0x2998},{0x29D8,0x29DB},
    {0x29FC,0x29FD},{0x2CF9,0x2CFC},{0x2CFE,0x2CFF},{0x2D70,0x2D70},{0x2E00,0x2E2E},{0x2E30,0x2E4F},
    {0x2E52,0x2E52},{0x3001,0x3003},{0x3008,0x3011},{0x3014,0x301F},{0x3030,0x3030},{0x303D,0x303D},
    {0x30A0,0x30A0},{0x30FB,0x30FB},{0xA4FE,0xA4FF},{0xA60D,0xA60F},{0xA673,0xA673},{0xA67E,0xA67E},
    {0xA6F2,0xA6F7},{0xA874,0xA877},{0xA8CE,0xA8CF},{0xA8F8,0xA8FA},{0xA8FC,0xA8FC},{0xA92E,0xA92F},
    {0xA95F,0xA95F},{0xA9C1,0xA9CD},{0xA9DE,0xA9DF},{0xAA5C,0xAA5F},{0xAADE,0xAADF},{0xAAF0,0xAAF1},
    {0xABEB,0xABEB},{0xFD3E,0xFD3F},{0xFE10,0xFE19},{0xFE30,0xFE52},{0xFE54,0xFE61},{0xFE63,0xFE63},
    {0xFE68,0xFE68},{0xFE6A,0xFE6B},{0xFF01,0xFF03},{0xFF05,0xFF0A},{0xFF0C,0xFF0F},{0xFF1A,0xFF1B},
    {0xFF1F,0xFF20},{0xFF3B,0xFF3D},{0xFF3F,0xFF3F},{0xFF5B,0xFF5B},{0xFF5D,0xFF5D},{0xFF5F,0xFF65},
    {0x10100,0x10102},{0x1039F,0x1039F},{0x103D0,0x103D0},{0x1056F,0x1056F},{0x10857,0x10857},{0x1091F,0x1091F},
    {0x1093F,0x1093F},{0x10A50,0x10A58},{0x10A7F,0x10A7F},{0x10AF0,0x10AF6},{0x10B39,0x10B3F},{0x10B99,0x10B9C},
    {0x10EAD,0x10EAD},{0x10F55,0x10F59},{0x11047,0x1104D},{0x110BB,0x110BC},{0x110BE,0x110C1},{0x11140,0x11143},
    {0x11174,0x11175},{0x111C5,0x111C8},{0x111CD,0x111CD},{0x111DB,0x111DB},{0x111DD,0x111DF},{0x11238,0x1123D},
    {0x112A9,0x112A9},{0x1144B,0x1144F},{0x1145A,0x1145B},{0x1145D,0x1145D},{0x114C6,0x114C6},{0x115C1,0x115D7},
    {0x11641,0x11643},{0x11660,0x1166C},{0x1173C,0x1173E},{0x1183B,0x1183B},{0x11944,0x11946},{0x119E2,0x119E2},
    {0x11A3F,0x11A46},{0x11A9A,0x11A9C},{0x11A9E,0x11AA2},{0x11C41,0x11C45},{0x11C70,0x11C71},{0x11EF7,0x11EF8},
    {0x11FFF,0x11FFF},{0x12470,0x12474},{0x16A6E,0x16A6F},{0x16AF5,0x16AF5},{0x16B37,0x16B3B},{0x16B44,0x16B44},
    {0x16E97,0x16E9A},{0x16FE2,0x16FE2},{0x1BC9F,0x1BC9F},{0x1DA87,0x1DA8B},{0x1E95E,0x1E95F},
};
const std::size_t kPunctuation_len = sizeof(kPunctuation) / sizeof(CpRange);

const CpRange kNumber[] = {
    {0x30,0x39},{0xB2,0xB3},{0xB9,0xB9},{0xBC,0xBE},{0x660,0x669},{0x6F0,0x6F9},
    {0x7C0,0x7C9},{0x966,0x96F},{0x9E6,0x9EF},{0x9F4,0x9F9},{0xA66,0xA6F},{0xAE6,0xAEF},
    {0xB66,0xB6F},{0xB72,0xB77},{0xBE6,0xBF2},{0xC66,0xC6F},{0xC78,0xC7E},{0xCE6,0xCEF},
    {0xD58,0xD5E},{0xD66,0xD78},{0xDE6,0xDEF},{0xE50,0xE59},{0xED0,0xED9},{0xF20,0xF33},
    {0x1040,0x1049},{0x1090,0x1099},{0x1369,0x137C},{0x16EE,0x16F0},{0x17E0,0x17E9},{0x17F0,0x17F9},
    {0x1810,0x1819},{0x1946,0x194F},{0x19D0,0x19DA},{0x1A80,0x1A89},{0x1A90,0x1A99},{0x1B50,0x1B59},
    {0x1BB0,0x1BB9},{0x1C40,0x1C49},{0x1C50,0x1C59},{0x2070,0x2070},{0x2074,0x2079},{0x2080,0x2089},
    {0x2150,0x2182},{0x2185,0x2189},{0x2460,0x249B},{0x24EA,0x24FF},{0x2776,0x2793},{0x2CFD,0x2CFD},
    {0x3007,0x3007},{0x3021,0x3029},{0x3038,0x303A},{0x3192,0x3195},{0x3220,0x3229},{0x3248,0x324F},
    {0x3251,0x325F},{0x3280,0x3289},{0x32B1,0x32BF},{0xA620,0xA629},{0xA6E6,0xA6EF},{0xA830,0xA835},
    {0xA8D0,0xA8D9},{0xA900,0xA909},{0xA9D0,0xA9D9},{0xA9F0,0xA9F9},{0xAA50,0xAA59},{0xABF0,0xABF9},
    {0xFF10,0xFF19},{0x10107,0x10133},{0x10140,0x10178},{0x1018A,0x1018B},{0x102E1,0x102FB},{0x10320,0x10323},
    {0x10341,0x10341},{0x1034A,0x1034A},{0x103D1,0x103D5},{0x104A0,0x104A9},{0x10858,0x1085F},{0x10879,0x1087F},
    {0x108A7,0x108AF},{0x108FB,0x108FF},{0x10916,0x1091B},{0x109BC,0x109BD},{0x109C0,0x109CF},{0x109D2,0x109FF},
    {0x10A40,0x10A48},{0x10A7D,0x10A7E},{0x10A9D,0x10A9F},{0x10AEB,0x10AEF},{0x10B58,0x10B5F},{0x10B78,0x10B7F},
    {0x10BA9,0x10BAF},{0x10CFA,0x10CFF},{0x10D30,0x10D39},{0x10E60,0x10E7E},{0x10F1D,0x10F26},{0x10F51,0x10F54},
    {0x10FC5,0x10FCB},{0x11052,0x1106F},{0x110F0,0x110F9},{0x11136,0x1113F},{0x111D0,0x111D9},{0x111E1,0x111F4},
    {0x112F0,0x112F9},{0x11450,0x11459},{0x114D0,0x114D9},{0x11650,0x11659},{0x116C0,0x116C9},{0x11730,0x1173B},
    {0x118E0,0x118F2},{0x11950,0x11959},{0x11C50,0x11C6C},{0x11D50,0x11D59},{0x11DA0,0x11DA9},{0x11FC0,0x11FD4},
    {0x12400,0x1246E},{0x16A60,0x16A69},{0x16B50,0x16B59},{0x16B5B,0x16B61},{0x16E80,0x16E96},{0x1D2E0,0x1D2F3},
    {0x1D360,0x1D378},{0x1D7CE,0x1D7FF},{0x1E140,0x1E149},{0x1E2F0,0x1E2F9},{0x1E8C7,0x1E8CF},{0x1E950,0x1E959},
    {0x1EC71,0x1ECAB},{0x1ECAD,0x1ECAF},{0x1ECB1,0x1ECB4},{0x1ED01,0x1ED2D},{0x1ED2F,0x1ED3D},{0x1F100,0x1F10C},
    {0x1FBF0,0x1FBF9},
};
const std::size_t kNumber_len = sizeof(kNumber) / sizeof(CpRange);

const CpRange kOtherBase[] = {
    {0x0,0x1F},{0x21,0x40},{0x5B,0x60},{0x7B,0x9F},{0xA1,0xA9},{0xAB,0xB4},
    {0xB6,0xB9},{0xBB,0xBF},{0xD7,0xD7},{0xF7,0xF7},{0x2C2,0x2C5},{0x2D2,0x2DF},
    {0x2E5,0x2EB},{0x2ED,0x2ED},{0x2EF,0x2FF},{0x375,0x375},{0x37E,0x37E},{0x384,0x385},
    {0x387,0x387},{0x3F6,0x3F6},{0x482,0x482},{0x55A,0x55F},{0x589,0x58A},{0x58D,0x58F},
    {0x5BE,0x5BE},{0x5C0,0x5C0},{0x5C3,0x5C3},{0x5C6,0x5C6},{0x5F3,0x5F4},{0x600,0x60F},
    {0x61B,0x61C},{0x61E,0x61F},{0x660,0x66D},{0x6D4,0x6D4},{0x6DD,0x6DE},{0x6E9,0x6E9},
    {0x6F0,0x6F9},{0x6FD,0x6FE},{0x700,0x70D},{0x70F,0x70F},{0x7C0,0x7C9},{0x7F6,0x7F9},
    {0x7FE,0x7FF},{0x830,0x83E},{0x85E,0x85E},{0x8E2,0x8E2},{0x964,0x970},{0x9E6,0x9EF},
    {0x9F2,0x9FB},{0x9FD,0x9FD},{0xA66,0xA6F},{0xA76,0xA76},{0xAE6,0xAF1},{0xB66,0xB70},
    {0xB72,0xB77},{0xBE6,0xBFA},{0xC66,0xC6F},{0xC77,0xC7F},{0xC84,0xC84},{0xCE6,0xCEF},
    {0xD4F,0xD4F},{0xD58,0xD5E},{0xD66,0xD79},{0xDE6,0xDEF},{0xDF4,0xDF4},{0xE3F,0xE3F},
    {0xE4F,0xE5B},{0xED0,0xED9},{0xF01,0xF17},{0xF1A,0xF34},{0xF36,0xF36},{0xF38,0xF38},
    {0xF3A,0xF3D},{0xF85,0xF85},{0xFBE,0xFC5},{0xFC7,0xFCC},{0xFCE,0xFDA},{0x1040,0x104F},
    {0x1090,0x1099},{0x109E,0x109F},{0x10FB,0x10FB},{0x1360,0x137C},{0x1390,0x1399},{0x1400,0x1400},
    {0x166D,0x166E},{0x169B,0x169C},{0x16EB,0x16F0},{0x1735,0x1736},{0x17D4,0x17D6},{0x17D8,0x17DB},
    {0x17E0,0x17E9},{0x17F0,0x17F9},{0x1800,0x180A},{0x180E,0x180E},{0x1810,0x1819},{0x1940,0x1940},
    {0x1944,0x194F},{0x19D0,0x19DA},{0x19DE,0x19FF},{0x1A1E,0x1A1F},{0x1A80,0x1A89},{0x1A90,0x1A99},
    {0x1AA0,0x1AA6},{0x1AA8,0x1AAD},{0x1B50,0x1B6A},{0x1B74,0x1B7C},{0x1BB0,0x1BB9},{0x1BFC,0x1BFF},
    {0x1C3B,0x1C49},{0x1C50,0x1C59},{0x1C7E,0x1C7F},{0x1CC0,0x1CC7},{0x1CD3,0x1CD3},{0x1FBD,0x1FBD},
    {0x1FBF,0x1FC1},{0x1FCD,0x1FCF},{0x1FDD,0x1FDF},{0x1FED,0x1FEF},{0x1FFD,0x1FFE},{0x200B,0x202E},
    {0x2030,0x205E},{0x2060,0x2064},{0x2066,0x2070},{0x2074,0x207E},{0x2080,0x208E},{0x20A0,0x20BF},
    {0x2100,0x2101},{0x2103,0x2106},{0x2108,0x2109},{0x2114,0x2114},{0x2116,0x2118},{0x211E,0x2123},
    {0x2125,0x2125},{0x2127,0x2127},{0x2129,0x2129},{0x212E,0x212E},{0x213A,0x213B},{0x2140,0x2144},
    {0x214A,0x214D},{0x214F,0x2182},{0x2185,0x218B},{0x2190,0x2426},{0x2440,0x244A},{0x2460,0x2B73},
    {0x2B76,0x2B95},{0x2B97,0x2BFF},{0x2CE5,0x2CEA},{0x2CF9,0x2CFF},{0x2D70,0x2D70},{0x2E00,0x2E2E},
    {0x2E30,0x2E52},{0x2E80,0x2E99},{0x2E9B,0x2EF3},{0x2F00,0x2FD5},{0x2FF0,0x2FFB},{0x3001,0x3004},
    {0x3007,0x3029},{0x3030,0x3030},{0x3036,0x303A},{0x303D,0x303F},{0x309B,0x309C},{0x30A0,0x30A0},
    {0x30FB,0x30FB},{0x3190,0x319F},{0x31C0,0x31E3},{0x3200,0x321E},{0x3220,0x33FF},{0x4DC0,0x4DFF},
    {0xA490,0xA4C6},{0xA4FE,0xA4FF},{0xA60D,0xA60F},{0xA620,0xA629},{0xA673,0xA673},{0xA67E,0xA67E},
    {0xA6E6,0xA6EF},{0xA6F2,0xA6F7},{0xA700,0xA716},{0xA720,0xA721},{0xA789,0xA78A},{0xA828,0xA82B},
    {0xA830,0xA839},{0xA874,0xA877},{0xA8CE,0xA8D9},{0xA8F8,0xA8FA},{0xA8FC,0xA8FC},{0xA900,0xA909},
    {0xA92E,0xA92F},{0xA95F,0xA95F},{0xA9C1,0xA9CD},{0xA9D0,0xA9D9},{0xA9DE,0xA9DF},{0xA9F0,0xA9F9},
    {0xAA50,0xAA59},{0xAA5C,0xAA5F},{0xAA77,0xAA79},{0xAADE,0xAADF},{0xAAF0,0xAAF1},{0xAB5B,0xAB5B},
    {0xAB6A,0xAB6B},{0xABEB,0xABEB},{0xABF0,0xABF9},{0xFB29,0xFB29},{0xFBB2,0xFBC1},{0xFD3E,0xFD3F},
    {0xFDFC,0xFDFD},{0xFE10,0xFE19},{0xFE30,0xFE52},{0xFE54,0xFE66},{0xFE68,0xFE6B},{0xFEFF,0xFEFF},
    {0xFF01,0xFF20},{0xFF3B,0xFF40},{0xFF5B,0xFF65},{0xFFE0,0xFFE6},{0xFFE8,0xFFEE},{0xFFF9,0xFFFD},
    {0x10100,0x10102},{0x10107,0x10133},{0x10137,0x1018E},{0x10190,0x1019C},{0x101A0,0x101A0},{0x101D0,0x101FC},
    {0x102E1,0x102FB},{0x10320,0x10323},{0x10341,0x10341},{0x1034A,0x1034A},{0x1039F,0x1039F},{0x103D0,0x103D5},
    {0x104A0,0x104A9},{0x1056F,0x1056F},{0x10857,0x1085F},{0x10877,0x1087F},{0x108A7,0x108AF},{0x108FB,0x108FF},
    {0x10916,0x1091B},{0x1091F,0x1091F},{0x1093F,0x1093F},{0x109BC,0x109BD},{0x109C0,0x109CF},{0x109D2,0x109FF},
    {0x10A40,0x10A48},{0x10A50,0x10A58},{0x10A7D,0x10A7F},{0x10A9D,0x10A9F},{0x10AC8,0x10AC8},{0x10AEB,0x10AF6},
    {0x10B39,0x10B3F},{0x10B58,0x10B5F},{0x10B78,0x10B7F},{0x10B99,0x10B9C},{0x10BA9,0x10BAF},{0x10CFA,0x10CFF},
    {0x10D30,0x10D39},{0x10E60,0x10E7E},{0x10EAD,0x10EAD},{0x10F1D,0x10F26},{0x10F51,0x10F59},{0x10FC5,0x10FCB},
    {0x11047,0x1104D},{0x11052,0x1106F},{0x110BB,0x110C1},{0x110CD,0x110CD},{0x110F0,0x110F9},{0x11136,0x11143},
    {0x11174,0x11175},{0x111C5,0x111C8},{0x111CD,0x111CD},{0x111D0,0x111D9},{0x111DB,0x111DB},{0x111DD,0x111DF},
    {0x111E1,0x111F4},{0x11238,0x1123D},{0x112A9,0x112A9},{0x112F0,0x112F9},{0x1144B,0x1145B},{0x1145D,0x1145D},
    {0x114C6,0x114C6},{0x114D0,0x114D9},{0x115C1,0x115D7},{0x11641,0x11643},{0x11650,0x11659},{0x11660,0x1166C},
    {0x116C0,0x116C9},{0x11730,0x1173F},{0x1183B,0x1183B},{0x118E0,0x118F2},{0x11944,0x11946},{0x11950,0x11959},
    {0x119E2,0x119E2},{0x11A3F,0x11A46},{0x11A9A,0x11A9C},{0x11A9E,0x11AA2},{0x11C41,0x11C45},{0x11C50,0x11C6C},
    {0x11C70,0x11C71},{0x11D50,0x11D59},{0x11DA0,0x11DA9},{0x11EF7,0x11EF8},{0x11FC0,0x11FF1},{0x11FFF,0x11FFF},
    {0x12400,0x1246E},{0x12470,0x12474},{0x13430,0x13438},{0x16A60,0x16A69},{0x16A6E,0x16A6F},{0x16AF5,0x16AF5},
    {0x16B37,0x16B3F},{0x16B44,0x16B45},{0x16B50,0x16B59},{0x16B5B,0x16B61},{0x16E80,0x16E9A},{0x16FE2,0x16FE2},
    {0x1BC9C,0x1BC9C},{0x1BC9F,0x1BCA3},{0x1D000,0x1D0F5},{0x1D100,0x1D126},{0x1D129,0x1D164},{0x1D16A,0x1D16C},
    {0x1D173,0x1D17A},{0x1D183,0x1D184},{0x1D18C,0x1D1A9},{0x1D1AE,0x1D1E8},{0x1D200,0x1D241},{0x1D245,0x1D245},
    {0x1D2E0,0x1D2F3},{0x1D300,0x1D356},{0x1D360,0x1D378},{0x1D6C1,0x1D6C1},{0x1D6DB,0x1D6DB},{0x1D6FB,0x1D6FB},
    {0x1D715,0x1D715},{0x1D735,0x1D735},{0x1D74F,0x1D74F},{0x1D76F,0x1D76F},{0x1D789,0x1D789},{0x1D7A9,0x1D7A9},
    {0x1D7C3,0x1D7C3},{0x1D7CE,0x1D9FF},{0x1DA37,0x1DA3A},{0x1DA6D,0x1DA74},{0x1DA76,0x1DA83},{0x1DA85,0x1DA8B},
    {0x1E140,0x1E149},{0x1E14F,0x1E14F},{0x1E2F0,0x1E2F9},{0x1E2FF,0x1E2FF},{0x1E8C7,0x1E8CF},{0x1E950,0x1E959},
    {0x1E95E,0x1E95F},{0x1EC71,0x1ECB4},{0x1ED01,0x1ED3D},{0x1EEF0,0x1EEF1},{0x1F000,0x1F02B},{0x1F030,0x1F093},
    {0x1F0A0,0x1F0AE},{0x1F0B1,0x1F0BF},{0x1F0C1,0x1F0CF},{0x1F0D1,0x1F0F5},{0x1F100,0x1F1AD},{0x1F1E6,0x1F202},
    {0x1F210,0x1F23B},{0x1F240,0x1F248},{0x1F250,0x1F251},{0x1F260,0x1F265},{0x1F300,0x1F6D7},{0x1F6E0,0x1F6EC},
    {0x1F6F0,0x1F6FC},{0x1F700,0x1F773},{0x1F780,0x1F7D8},{0x1F7E0,0x1F7EB},{0x1F800,0x1F80B},{0x1F810,0x1F847},
    {0x1F850,0x1F859},{0x1F860,0x1F887},{0x1F890,0x1F8AD},{0x1F8B0,0x1F8B1},{0x1F900,0x1F978},{0x1F97A,0x1F9CB},
    {0x1F9CD,0x1FA53},{0x1FA60,0x1FA6D},{0x1FA70,0x1FA74},{0x1FA78,0x1FA7A},{0x1FA80,0x1FA86},{0x1FA90,0x1FAA8},
    {0x1FAB0,0x1FAB6},{0x1FAC0,0x1FAC2},{0x1FAD0,0x1FAD6},{0x1FB00,0x1FB92},{0x1FB94,0x1FBCA},{0x1FBF0,0x1FBF9},
    {0xE0001,0xE0001},{0xE0020,0xE007F},
};
const std::size_t kOtherBase_len = sizeof(kOtherBase) / sizeof(CpRange);

} // namespace scribe::ucd
