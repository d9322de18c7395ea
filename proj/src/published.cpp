#include "pptseq/published.hpp"

#include <algorithm>

namespace pptseq::published {

namespace {

constexpr std::size_t kCounts[17][9] = {
    {514, 341, 255, 180, 153, 116, 116, 80, 80},
    {1035, 672, 505, 384, 324, 227, 227, 171, 117},
    {1537, 1004, 751, 512, 472, 329, 329, 277, 208},
    {2017, 1349, 992, 674, 595, 462, 381, 320, 240},
    {2772, 1832, 1405, 947, 797, 640, 544, 448, 376},
    {4997, 3321, 2481, 1626, 1431, 1091, 951, 875, 609},
    {7901, 5192, 3921, 2619, 2234, 1818, 1550, 1372, 1106},
    {10264, 6857, 5113, 3327, 2885, 2255, 2094, 1773, 1382},
    {12628, 8424, 6385, 4248, 3585, 2883, 2519, 2110, 1760},
    {15378, 10241, 7608, 5130, 4357, 3424, 2948, 2581, 1941},
    {21375, 14267, 10658, 7247, 6153, 4745, 4264, 3513, 2772},
    {26271, 17503, 13034, 8783, 7584, 5792, 5282, 4544, 3401},
    {30809, 20554, 15480, 10110, 8804, 6828, 6303, 5157, 3986},
    {35757, 23842, 17881, 11836, 10096, 8072, 7186, 5836, 4566},
    {40102, 26732, 20210, 12393, 11428, 8848, 7853, 6598, 5265},
    {45664, 30441, 22860, 15217, 13313, 10199, 9193, 7753, 6061},
    {50745, 33845, 25209, 16769, 14296, 11046, 9983, 8625, 6673},
};

constexpr std::string_view kMod3 =
    "ACAACAABAACACABAAACCACAAACAAABACACAABAAAACCAAACAAAABCAACCACABAACCAAABAAAACABCACAAAAAAACCAAACCCABAAACAAACBAAACABCAACACABBAAAACACAAAAA";
constexpr std::string_view kMod5 =
    "DAACBAEABDDADCEAEBACACDBAEAECDAAACDBBBAEACDEABBACDAADDAEACCAAAEAEBECCADCABBEDDAACCEEAABDDADDBAABAACEBEAEAAACCBBAABEDCACDAEBADDAAAEEEEBDCAADCAEBECDDDEABBBACC";
// Contains an 'I', which is not a residue class mod 7.
constexpr std::string_view kMod7 =
    "DFBAAACDEFAGGAECBABFADDCBAEFBGEFGFAADEAGDCCGDAAFEAEFBBAFBGACCCADAGBDDFADBFCDECAGBGAEGBAFFCEEDABDFAACCFAABADCCBGDAAEEEEBGAIEFGAGFACDCGGEECGDAAFDDAFBBDFFGEAG";

}  // namespace

std::size_t table_count(std::size_t length, u64 prime) {
    const auto li = std::find(kTableLengths.begin(), kTableLengths.end(), length);
    const auto pi = std::find(kTablePrimes.begin(), kTablePrimes.end(), prime);
    if (li == kTableLengths.end() || pi == kTablePrimes.end()) return 0;
    return kCounts[li - kTableLengths.begin()][pi - kTablePrimes.begin()];
}

bool is_suspect_cell(std::size_t length, u64 prime) {
    return (length == 1000 || length == 2000) && (prime == 17 || prime == 19);
}

std::string_view class_string(u64 modulus) {
    switch (modulus) {
        case 3: return kMod3;
        case 5: return kMod5;
        case 7: return kMod7;
        default: return {};
    }
}

}  // namespace pptseq::published
