// Conway polynomials for every p^k <= 2^24 with k >= 2, from Frank Luebeck's tables.
// Coefficients are little-endian; the leading 1 is included.

#include "tsrforge/conway.hpp"

#include <algorithm>
#include <array>

namespace tsrforge {
namespace {

struct ConwayEntry {
  std::uint32_t p;
  std::uint8_t k;
  std::uint8_t offset_hi;
  std::uint16_t offset_lo;
};

// clang-format off
constexpr std::uint16_t kCoeffs[] = {
  1, 1, 1, 1, 1, 0, 1, 1, 1, 0, 0, 1, 1, 0, 1, 0, 0, 1, 1, 1,
  0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1, 1, 0, 0,
  0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1, 1, 1, 0, 1, 1, 0,
  0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 0,
  1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0,
  0, 1, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1,
  0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1, 0, 1, 0,
  0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0,
  0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0,
  1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0,
  0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 1, 1, 1, 1, 0, 1, 1, 0, 0,
  0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0,
  0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 0, 1, 1,
  1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0,
  0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0,
  1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0,
  0, 1, 2, 2, 1, 1, 2, 0, 1, 2, 0, 0, 2, 1, 1, 2, 0, 0, 0, 1,
  2, 2, 1, 0, 2, 0, 1, 1, 0, 2, 0, 0, 0, 0, 1, 2, 2, 2, 0, 1,
  2, 0, 0, 1, 1, 1, 2, 2, 0, 0, 0, 0, 0, 1, 2, 1, 0, 0, 2, 2,
  2, 0, 0, 0, 1, 1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 0, 1,
  0, 1, 1, 1, 0, 0, 0, 0, 0, 1, 1, 2, 0, 0, 0, 0, 0, 0, 0, 0,
  0, 0, 0, 1, 2, 0, 1, 2, 0, 1, 2, 1, 1, 2, 0, 0, 0, 0, 1, 1,
  1, 2, 0, 0, 1, 0, 0, 2, 0, 0, 0, 0, 0, 0, 1, 2, 4, 1, 3, 3,
  0, 1, 2, 4, 4, 0, 1, 3, 4, 0, 0, 0, 1, 2, 0, 1, 4, 1, 0, 1,
  3, 3, 0, 0, 0, 0, 0, 1, 2, 4, 3, 0, 1, 0, 0, 0, 1, 3, 1, 0,
  2, 0, 0, 0, 0, 0, 1, 2, 1, 4, 2, 3, 3, 0, 0, 0, 0, 1, 3, 6,
  1, 4, 0, 6, 1, 3, 4, 5, 0, 1, 4, 1, 0, 0, 0, 1, 3, 6, 4, 5,
  1, 0, 1, 4, 6, 0, 0, 0, 0, 0, 1, 3, 2, 6, 4, 0, 0, 0, 0, 1,
  2, 7, 1, 9, 2, 0, 1, 2, 10, 8, 0, 1, 9, 0, 10, 0, 0, 1, 2, 7,
  6, 4, 3, 0, 1, 2, 12, 1, 11, 2, 0, 1, 2, 12, 3, 0, 1, 11, 4, 0,
  0, 0, 1, 2, 11, 11, 10, 0, 0, 1, 3, 16, 1, 14, 1, 0, 1, 3, 10, 7,
  0, 1, 14, 1, 0, 0, 0, 1, 2, 18, 1, 17, 4, 0, 1, 2, 11, 2, 0, 1,
  17, 5, 0, 0, 0, 1, 5, 21, 1, 18, 2, 0, 1, 5, 19, 3, 0, 1, 18, 3,
  0, 0, 0, 1, 2, 24, 1, 27, 2, 0, 1, 2, 15, 2, 0, 1, 3, 29, 1, 28,
  1, 0, 1, 3, 16, 3, 0, 1, 2, 33, 1, 35, 6, 0, 1, 2, 24, 6, 0, 1,
  6, 38, 1, 35, 1, 0, 1, 6, 23, 0, 0, 1, 3, 42, 1, 40, 1, 0, 1, 3,
  42, 5, 0, 1, 5, 45, 1, 42, 3, 0, 1, 5, 40, 8, 0, 1, 2, 49, 1, 51,
  3, 0, 1, 2, 38, 9, 0, 1, 2, 58, 1, 57, 5, 0, 1, 2, 40, 2, 0, 1,
  2, 60, 1, 59, 7, 0, 1, 2, 40, 3, 0, 1, 2, 63, 1, 65, 6, 0, 1, 7,
  69, 1, 64, 4, 0, 1, 5, 70, 1, 68, 2, 0, 1, 3, 78, 1, 76, 9, 0, 1,
  2, 82, 1, 81, 3, 0, 1, 3, 82, 1, 86, 3, 0, 1, 5, 96, 1, 92, 9, 0,
  1, 2, 97, 1, 99, 3, 0, 1, 5, 102, 1, 98, 2, 0, 1, 2, 103, 1, 105, 5,
  0, 1, 6, 108, 1, 103, 1, 0, 1, 3, 101, 1, 110, 8, 0, 1, 3, 126, 1, 124,
  3, 0, 1, 2, 127, 1, 129, 3, 0, 1, 3, 131, 1, 134, 6, 0, 1, 2, 138, 1,
  137, 6, 0, 1, 2, 145, 1, 147, 3, 0, 1, 6, 149, 1, 145, 1, 0, 1, 5, 152,
  1, 152, 1, 0, 1, 2, 159, 1, 161, 7, 0, 1, 5, 166, 1, 162, 7, 0, 1, 2,
  169, 1, 171, 2, 0, 1, 2, 172, 1, 177, 4, 0, 1, 2, 177, 1, 179, 6, 0, 1,
  19, 190, 1, 172, 4, 0, 1, 5, 192, 1, 188, 1, 0, 1, 2, 192, 1, 195, 3, 0,
  1, 3, 193, 1, 196, 1, 0, 1, 2, 207, 1, 209, 2, 0, 1, 3, 221, 1, 220, 6,
  0, 1, 2, 220, 1, 225, 2, 0, 1, 6, 228, 1, 223, 1, 0, 1, 3, 232, 1, 230,
  1, 0, 1, 7, 237, 1, 232, 11, 0, 1, 7, 238, 1, 234, 1, 0, 1, 6, 242, 1,
  245, 3, 0, 1, 3, 251, 1, 5, 261, 1, 2, 268, 1, 6, 269, 1, 5, 274, 1, 3,
  280, 1, 3, 282, 1, 2, 292, 1, 5, 306, 1, 17, 310, 1, 10, 310, 1, 2, 313, 1,
  3, 326, 1, 10, 332, 1, 2, 343, 1, 2, 348, 1, 3, 348, 1, 7, 358, 1, 6, 366,
  1, 2, 369, 1, 2, 374, 1, 5, 382, 1, 2, 379, 1, 5, 392, 1, 3, 396, 1, 21,
  404, 1, 2, 418, 1, 2, 417, 1, 7, 430, 1, 5, 432, 1, 15, 436, 1, 2, 437, 1,
  3, 444, 1, 13, 454, 1, 2, 460, 1, 3, 461, 1, 2, 463, 1, 13, 474, 1, 3, 485,
  1, 2, 487, 1, 7, 493, 1, 5, 498, 1, 2, 508, 1, 3, 515, 1, 2, 522, 1, 2,
  537, 1, 2, 543, 1, 2, 553, 1, 2, 559, 1, 3, 568, 1, 3, 570, 1, 5, 572, 1,
  2, 583, 1, 3, 592, 1, 7, 598, 1, 7, 598, 1, 3, 606, 1, 2, 609, 1, 3, 612,
  1, 2, 618, 1, 3, 629, 1, 3, 635, 1, 11, 641, 1, 5, 645, 1, 2, 649, 1, 2,
  655, 1, 2, 660, 1, 5, 672, 1, 2, 672, 1, 5, 682, 1, 3, 686, 1, 2, 697, 1,
  2, 705, 1, 11, 715, 1, 5, 725, 1, 6, 732, 1, 3, 734, 1, 5, 742, 1, 3, 749,
  1, 2, 753, 1, 6, 758, 1, 11, 765, 1, 2, 772, 1, 2, 786, 1, 2, 793, 1, 3,
  799, 1, 3, 806, 1, 2, 816, 1, 3, 821, 1, 2, 821, 1, 2, 828, 1, 11, 838, 1,
  2, 852, 1, 3, 850, 1, 2, 858, 1, 5, 862, 1, 2, 873, 1, 3, 869, 1, 2, 879,
  1, 5, 885, 1, 2, 903, 1, 17, 909, 1, 7, 910, 1, 3, 917, 1, 5, 934, 1, 2,
  940, 1, 2, 943, 1, 3, 947, 1, 5, 965, 1, 6, 970, 1, 3, 972, 1, 5, 981, 1,
  6, 989, 1, 7, 995, 1, 11, 1008, 1, 3, 1006, 1, 2, 1015, 1, 10, 1020, 1, 14, 1029,
  1, 5, 1030, 1, 3, 1033, 1, 3, 1038, 1, 7, 1049, 1, 2, 1057, 1, 3, 1062, 1, 6,
  1065, 1, 3, 1085, 1, 2, 1090, 1, 5, 1092, 1, 3, 1096, 1, 5, 1091, 1, 2, 1108, 1,
  2, 1113, 1, 2, 1122, 1, 11, 1124, 1, 17, 1148, 1, 5, 1152, 1, 5, 1161, 1, 2, 1167,
  1, 7, 1180, 1, 2, 1181, 1, 3, 1187, 1, 11, 1192, 1, 2, 1209, 1, 3, 1211, 1, 5,
  1220, 1, 2, 1225, 1, 3, 1229, 1, 2, 1236, 1, 7, 1246, 1, 2, 1258, 1, 2, 1276, 1,
  3, 1277, 1, 2, 1279, 1, 6, 1280, 1, 2, 1290, 1, 10, 1294, 1, 2, 1295, 1, 6, 1302,
  1, 2, 1306, 1, 13, 1316, 1, 13, 1320, 1, 3, 1326, 1, 3, 1355, 1, 5, 1365, 1, 2,
  1365, 1, 2, 1377, 1, 13, 1395, 1, 3, 1404, 1, 3, 1421, 1, 2, 1426, 1, 6, 1425, 1,
  3, 1420, 1, 7, 1438, 1, 3, 1446, 1, 2, 1446, 1, 2, 1449, 1, 3, 1458, 1, 6, 1470,
  1, 3, 1480, 1, 2, 1482, 1, 5, 1485, 1, 14, 1487, 1, 2, 1485, 1, 2, 1495, 1, 11,
  1509, 1, 2, 1518, 1, 2, 1530, 1, 5, 1541, 1, 2, 1541, 1, 3, 1552, 1, 19, 1558, 1,
  3, 1565, 1, 2, 1570, 1, 3, 1578, 1, 5, 1581, 1, 11, 1594, 1, 3, 1600, 1, 5, 1605,
  1, 7, 1597, 1, 3, 1606, 1, 2, 1615, 1, 2, 1617, 1, 3, 1622, 1, 2, 1633, 1, 11,
  1655, 1, 3, 1662, 1, 2, 1663, 1, 2, 1665, 1, 2, 1692, 1, 3, 1692, 1, 3, 1686, 1,
  3, 1696, 1, 3, 1716, 1, 3, 1722, 1, 2, 1726, 1, 2, 1740, 1, 2, 1743, 1, 7, 1746,
  1, 6, 1757, 1, 5, 1774, 1, 10, 1782, 1, 2, 1783, 1, 6, 1781, 1, 11, 1796, 1, 6,
  1809, 1, 5, 1822, 1, 3, 1829, 1, 5, 1845, 1, 2, 1860, 1, 2, 1866, 1, 14, 1869, 1,
  10, 1870, 1, 2, 1873, 1, 6, 1877, 1, 3, 1883, 1, 2, 1896, 1, 2, 1906, 1, 3, 1908,
  1, 2, 1927, 1, 5, 1932, 1, 2, 1948, 1, 3, 1949, 1, 2, 1972, 1, 2, 1975, 1, 2,
  1986, 1, 5, 1990, 1, 2, 1993, 1, 3, 1998, 1, 5, 2002, 1, 3, 2004, 1, 5, 2016, 1,
  2, 2021, 1, 2, 2028, 1, 7, 2026, 1, 2, 2049, 1, 5, 2058, 1, 2, 2065, 1, 3, 2080,
  1, 2, 2079, 1, 5, 2084, 1, 7, 2080, 1, 2, 2095, 1, 7, 2110, 1, 5, 2108, 1, 3,
  2120, 1, 2, 2130, 1, 10, 2136, 1, 2, 2140, 1, 3, 2141, 1, 3, 2145, 1, 23, 2160, 1,
  7, 2177, 1, 5, 2202, 1, 5, 2205, 1, 2, 2209, 1, 2, 2217, 1, 2, 2232, 1, 3, 2233,
  1, 2, 2234, 1, 7, 2249, 1, 2, 2266, 1, 2, 2265, 1, 3, 2268, 1, 7, 2274, 1, 19,
  2283, 1, 2, 2289, 1, 5, 2292, 1, 2, 2305, 1, 3, 2309, 1, 2, 2329, 1, 2, 2329, 1,
  7, 2339, 1, 3, 2342, 1, 13, 2347, 1, 2, 2352, 1, 2, 2370, 1, 5, 2376, 1, 3, 2379,
  1, 5, 2382, 1, 2, 2385, 1, 3, 2392, 1, 11, 2398, 1, 6, 2410, 1, 3, 2408, 1, 5,
  2421, 1, 2, 2433, 1, 6, 2438, 1, 5, 2446, 1, 2, 2455, 1, 2, 2466, 1, 5, 2472, 1,
  2, 2476, 1, 3, 2502, 1, 17, 2520, 1, 2, 2527, 1, 2, 2538, 1, 5, 2541, 1, 2, 2545,
  1, 6, 2549, 1, 2, 2553, 1, 2, 2560, 1, 7, 2589, 1, 7, 2586, 1, 3, 2603, 1, 5,
  2614, 1, 2, 2620, 1, 3, 2627, 1, 3, 2646, 1, 3, 2652, 1, 2, 2658, 1, 5, 2655, 1,
  7, 2662, 1, 2, 2676, 1, 2, 2679, 1, 5, 2686, 1, 19, 2684, 1, 2, 2688, 1, 2, 2693,
  1, 2, 2706, 1, 7, 2710, 1, 5, 2712, 1, 3, 2718, 1, 3, 2723, 1, 3, 2722, 1, 2,
  2737, 1, 6, 2741, 1, 3, 2747, 1, 3, 2766, 1, 3, 2772, 1, 2, 2783, 1, 6, 2789, 1,
  2, 2793, 1, 3, 2800, 1, 2, 2802, 1, 2, 2814, 1, 5, 2830, 1, 2, 2833, 1, 2, 2839,
  1, 2, 2847, 1, 11, 2856, 1, 2, 2857, 1, 7, 2878, 1, 5, 2885, 1, 3, 2891, 1, 5,
  2902, 1, 2, 2900, 1, 5, 2916, 1, 5, 2925, 1, 2, 2938, 1, 13, 2952, 1, 2, 2956, 1,
  2, 2959, 1, 3, 2968, 1, 10, 2970, 1, 17, 2995, 1, 14, 2999, 1, 2, 3007, 1, 2, 3015,
  1, 5, 3021, 1, 2, 3036, 1, 3, 3030, 1, 11, 3048, 1, 6, 3057, 1, 2, 3063, 1, 6,
  3078, 1, 2, 3079, 1, 3, 3082, 1, 6, 3105, 1, 7, 3118, 1, 7, 3114, 1, 3, 3131, 1,
  3, 3162, 1, 5, 3164, 1, 7, 3162, 1, 7, 3179, 1, 2, 3183, 1, 11, 3189, 1, 2, 3199,
  1, 3, 3204, 1, 5, 3212, 1, 10, 3211, 1, 6, 3221, 1, 6, 3249, 1, 2, 3252, 1, 3,
  3252, 1, 3, 3248, 1, 3, 3269, 1, 2, 3293, 1, 6, 3297, 1, 2, 3306, 1, 10, 3312, 1,
  6, 3317, 1, 2, 3319, 1, 3, 3328, 1, 3, 3322, 1, 5, 3342, 1, 2, 3343, 1, 11, 3357,
  1, 22, 3360, 1, 2, 3366, 1, 5, 3372, 1, 3, 3387, 1, 3, 3389, 1, 5, 3405, 1, 2,
  3405, 1, 5, 3432, 1, 3, 3448, 1, 7, 3454, 1, 2, 3460, 1, 3, 3461, 1, 2, 3455, 1,
  2, 3465, 1, 2, 3490, 1, 2, 3498, 1, 7, 3508, 1, 2, 3516, 1, 5, 3526, 1, 17, 3525,
  1, 2, 3532, 1, 2, 3525, 1, 7, 3535, 1, 2, 3546, 1, 2, 3553, 1, 3, 3558, 1, 2,
  3567, 1, 2, 3577, 1, 3, 3582, 1, 3, 3585, 1, 5, 3605, 1, 2, 3609, 1, 3, 3605, 1,
  5, 3616, 1, 15, 3630, 1, 2, 3630, 1, 2, 3642, 1, 2, 3658, 1, 13, 3667, 1, 5, 3670,
  1, 2, 3673, 1, 2, 3685, 1, 5, 3692, 1, 2, 3697, 1, 2, 3708, 1, 7, 3716, 1, 3,
  3725, 1, 2, 3729, 1, 7, 3736, 1, 3, 3760, 1, 5, 3765, 1, 7, 3751, 1, 2, 3774, 1,
  5, 3788, 1, 2, 3796, 1, 2, 3799, 1, 3, 3819, 1, 3, 3822, 1, 3, 3827, 1, 5, 3845,
  1, 2, 3847, 1, 2, 3852, 1, 5, 3858, 1, 2, 3876, 1, 13, 3879, 1, 11, 3888, 1, 2,
  3903, 1, 13, 3909, 1, 2, 3913, 1, 3, 3914, 1, 2, 3922, 1, 3, 3928, 1, 2, 3927, 1,
  3, 3941, 1, 2, 3946, 1, 6, 3966, 1, 2, 3988, 1, 3, 4000, 1, 2, 4002, 1, 5, 4005,
  1, 2, 4009, 1, 2, 4015, 1, 2, 4020, 1, 3, 4020, 1, 3, 4043, 1, 10, 4050, 1, 5,
  4056, 1, 3, 4061, 1, 11, 4076, 1, 2, 4090, 1, 2, 4092, 1,
};

constexpr ConwayEntry kEntries[] = {
  {2, 2, 0, 0},
  {2, 3, 0, 3},
  {2, 4, 0, 7},
  {2, 5, 0, 12},
  {2, 6, 0, 18},
  {2, 7, 0, 25},
  {2, 8, 0, 33},
  {2, 9, 0, 42},
  {2, 10, 0, 52},
  {2, 11, 0, 63},
  {2, 12, 0, 75},
  {2, 13, 0, 88},
  {2, 14, 0, 102},
  {2, 15, 0, 117},
  {2, 16, 0, 133},
  {2, 17, 0, 150},
  {2, 18, 0, 168},
  {2, 19, 0, 187},
  {2, 20, 0, 207},
  {2, 21, 0, 228},
  {2, 22, 0, 250},
  {2, 23, 0, 273},
  {2, 24, 0, 297},
  {3, 2, 0, 322},
  {3, 3, 0, 325},
  {3, 4, 0, 329},
  {3, 5, 0, 334},
  {3, 6, 0, 340},
  {3, 7, 0, 347},
  {3, 8, 0, 355},
  {3, 9, 0, 364},
  {3, 10, 0, 374},
  {3, 11, 0, 385},
  {3, 12, 0, 397},
  {3, 13, 0, 410},
  {3, 14, 0, 424},
  {3, 15, 0, 439},
  {5, 2, 0, 455},
  {5, 3, 0, 458},
  {5, 4, 0, 462},
  {5, 5, 0, 467},
  {5, 6, 0, 473},
  {5, 7, 0, 480},
  {5, 8, 0, 488},
  {5, 9, 0, 497},
  {5, 10, 0, 507},
  {7, 2, 0, 518},
  {7, 3, 0, 521},
  {7, 4, 0, 525},
  {7, 5, 0, 530},
  {7, 6, 0, 536},
  {7, 7, 0, 543},
  {7, 8, 0, 551},
  {11, 2, 0, 560},
  {11, 3, 0, 563},
  {11, 4, 0, 567},
  {11, 5, 0, 572},
  {11, 6, 0, 578},
  {13, 2, 0, 585},
  {13, 3, 0, 588},
  {13, 4, 0, 592},
  {13, 5, 0, 597},
  {13, 6, 0, 603},
  {17, 2, 0, 610},
  {17, 3, 0, 613},
  {17, 4, 0, 617},
  {17, 5, 0, 622},
  {19, 2, 0, 628},
  {19, 3, 0, 631},
  {19, 4, 0, 635},
  {19, 5, 0, 640},
  {23, 2, 0, 646},
  {23, 3, 0, 649},
  {23, 4, 0, 653},
  {23, 5, 0, 658},
  {29, 2, 0, 664},
  {29, 3, 0, 667},
  {29, 4, 0, 671},
  {31, 2, 0, 676},
  {31, 3, 0, 679},
  {31, 4, 0, 683},
  {37, 2, 0, 688},
  {37, 3, 0, 691},
  {37, 4, 0, 695},
  {41, 2, 0, 700},
  {41, 3, 0, 703},
  {41, 4, 0, 707},
  {43, 2, 0, 712},
  {43, 3, 0, 715},
  {43, 4, 0, 719},
  {47, 2, 0, 724},
  {47, 3, 0, 727},
  {47, 4, 0, 731},
  {53, 2, 0, 736},
  {53, 3, 0, 739},
  {53, 4, 0, 743},
  {59, 2, 0, 748},
  {59, 3, 0, 751},
  {59, 4, 0, 755},
  {61, 2, 0, 760},
  {61, 3, 0, 763},
  {61, 4, 0, 767},
  {67, 2, 0, 772},
  {67, 3, 0, 775},
  {71, 2, 0, 779},
  {71, 3, 0, 782},
  {73, 2, 0, 786},
  {73, 3, 0, 789},
  {79, 2, 0, 793},
  {79, 3, 0, 796},
  {83, 2, 0, 800},
  {83, 3, 0, 803},
  {89, 2, 0, 807},
  {89, 3, 0, 810},
  {97, 2, 0, 814},
  {97, 3, 0, 817},
  {101, 2, 0, 821},
  {101, 3, 0, 824},
  {103, 2, 0, 828},
  {103, 3, 0, 831},
  {107, 2, 0, 835},
  {107, 3, 0, 838},
  {109, 2, 0, 842},
  {109, 3, 0, 845},
  {113, 2, 0, 849},
  {113, 3, 0, 852},
  {127, 2, 0, 856},
  {127, 3, 0, 859},
  {131, 2, 0, 863},
  {131, 3, 0, 866},
  {137, 2, 0, 870},
  {137, 3, 0, 873},
  {139, 2, 0, 877},
  {139, 3, 0, 880},
  {149, 2, 0, 884},
  {149, 3, 0, 887},
  {151, 2, 0, 891},
  {151, 3, 0, 894},
  {157, 2, 0, 898},
  {157, 3, 0, 901},
  {163, 2, 0, 905},
  {163, 3, 0, 908},
  {167, 2, 0, 912},
  {167, 3, 0, 915},
  {173, 2, 0, 919},
  {173, 3, 0, 922},
  {179, 2, 0, 926},
  {179, 3, 0, 929},
  {181, 2, 0, 933},
  {181, 3, 0, 936},
  {191, 2, 0, 940},
  {191, 3, 0, 943},
  {193, 2, 0, 947},
  {193, 3, 0, 950},
  {197, 2, 0, 954},
  {197, 3, 0, 957},
  {199, 2, 0, 961},
  {199, 3, 0, 964},
  {211, 2, 0, 968},
  {211, 3, 0, 971},
  {223, 2, 0, 975},
  {223, 3, 0, 978},
  {227, 2, 0, 982},
  {227, 3, 0, 985},
  {229, 2, 0, 989},
  {229, 3, 0, 992},
  {233, 2, 0, 996},
  {233, 3, 0, 999},
  {239, 2, 0, 1003},
  {239, 3, 0, 1006},
  {241, 2, 0, 1010},
  {241, 3, 0, 1013},
  {251, 2, 0, 1017},
  {251, 3, 0, 1020},
  {257, 2, 0, 1024},
  {263, 2, 0, 1027},
  {269, 2, 0, 1030},
  {271, 2, 0, 1033},
  {277, 2, 0, 1036},
  {281, 2, 0, 1039},
  {283, 2, 0, 1042},
  {293, 2, 0, 1045},
  {307, 2, 0, 1048},
  {311, 2, 0, 1051},
  {313, 2, 0, 1054},
  {317, 2, 0, 1057},
  {331, 2, 0, 1060},
  {337, 2, 0, 1063},
  {347, 2, 0, 1066},
  {349, 2, 0, 1069},
  {353, 2, 0, 1072},
  {359, 2, 0, 1075},
  {367, 2, 0, 1078},
  {373, 2, 0, 1081},
  {379, 2, 0, 1084},
  {383, 2, 0, 1087},
  {389, 2, 0, 1090},
  {397, 2, 0, 1093},
  {401, 2, 0, 1096},
  {409, 2, 0, 1099},
  {419, 2, 0, 1102},
  {421, 2, 0, 1105},
  {431, 2, 0, 1108},
  {433, 2, 0, 1111},
  {439, 2, 0, 1114},
  {443, 2, 0, 1117},
  {449, 2, 0, 1120},
  {457, 2, 0, 1123},
  {461, 2, 0, 1126},
  {463, 2, 0, 1129},
  {467, 2, 0, 1132},
  {479, 2, 0, 1135},
  {487, 2, 0, 1138},
  {491, 2, 0, 1141},
  {499, 2, 0, 1144},
  {503, 2, 0, 1147},
  {509, 2, 0, 1150},
  {521, 2, 0, 1153},
  {523, 2, 0, 1156},
  {541, 2, 0, 1159},
  {547, 2, 0, 1162},
  {557, 2, 0, 1165},
  {563, 2, 0, 1168},
  {569, 2, 0, 1171},
  {571, 2, 0, 1174},
  {577, 2, 0, 1177},
  {587, 2, 0, 1180},
  {593, 2, 0, 1183},
  {599, 2, 0, 1186},
  {601, 2, 0, 1189},
  {607, 2, 0, 1192},
  {613, 2, 0, 1195},
  {617, 2, 0, 1198},
  {619, 2, 0, 1201},
  {631, 2, 0, 1204},
  {641, 2, 0, 1207},
  {643, 2, 0, 1210},
  {647, 2, 0, 1213},
  {653, 2, 0, 1216},
  {659, 2, 0, 1219},
  {661, 2, 0, 1222},
  {673, 2, 0, 1225},
  {677, 2, 0, 1228},
  {683, 2, 0, 1231},
  {691, 2, 0, 1234},
  {701, 2, 0, 1237},
  {709, 2, 0, 1240},
  {719, 2, 0, 1243},
  {727, 2, 0, 1246},
  {733, 2, 0, 1249},
  {739, 2, 0, 1252},
  {743, 2, 0, 1255},
  {751, 2, 0, 1258},
  {757, 2, 0, 1261},
  {761, 2, 0, 1264},
  {769, 2, 0, 1267},
  {773, 2, 0, 1270},
  {787, 2, 0, 1273},
  {797, 2, 0, 1276},
  {809, 2, 0, 1279},
  {811, 2, 0, 1282},
  {821, 2, 0, 1285},
  {823, 2, 0, 1288},
  {827, 2, 0, 1291},
  {829, 2, 0, 1294},
  {839, 2, 0, 1297},
  {853, 2, 0, 1300},
  {857, 2, 0, 1303},
  {859, 2, 0, 1306},
  {863, 2, 0, 1309},
  {877, 2, 0, 1312},
  {881, 2, 0, 1315},
  {883, 2, 0, 1318},
  {887, 2, 0, 1321},
  {907, 2, 0, 1324},
  {911, 2, 0, 1327},
  {919, 2, 0, 1330},
  {929, 2, 0, 1333},
  {937, 2, 0, 1336},
  {941, 2, 0, 1339},
  {947, 2, 0, 1342},
  {953, 2, 0, 1345},
  {967, 2, 0, 1348},
  {971, 2, 0, 1351},
  {977, 2, 0, 1354},
  {983, 2, 0, 1357},
  {991, 2, 0, 1360},
  {997, 2, 0, 1363},
  {1009, 2, 0, 1366},
  {1013, 2, 0, 1369},
  {1019, 2, 0, 1372},
  {1021, 2, 0, 1375},
  {1031, 2, 0, 1378},
  {1033, 2, 0, 1381},
  {1039, 2, 0, 1384},
  {1049, 2, 0, 1387},
  {1051, 2, 0, 1390},
  {1061, 2, 0, 1393},
  {1063, 2, 0, 1396},
  {1069, 2, 0, 1399},
  {1087, 2, 0, 1402},
  {1091, 2, 0, 1405},
  {1093, 2, 0, 1408},
  {1097, 2, 0, 1411},
  {1103, 2, 0, 1414},
  {1109, 2, 0, 1417},
  {1117, 2, 0, 1420},
  {1123, 2, 0, 1423},
  {1129, 2, 0, 1426},
  {1151, 2, 0, 1429},
  {1153, 2, 0, 1432},
  {1163, 2, 0, 1435},
  {1171, 2, 0, 1438},
  {1181, 2, 0, 1441},
  {1187, 2, 0, 1444},
  {1193, 2, 0, 1447},
  {1201, 2, 0, 1450},
  {1213, 2, 0, 1453},
  {1217, 2, 0, 1456},
  {1223, 2, 0, 1459},
  {1229, 2, 0, 1462},
  {1231, 2, 0, 1465},
  {1237, 2, 0, 1468},
  {1249, 2, 0, 1471},
  {1259, 2, 0, 1474},
  {1277, 2, 0, 1477},
  {1279, 2, 0, 1480},
  {1283, 2, 0, 1483},
  {1289, 2, 0, 1486},
  {1291, 2, 0, 1489},
  {1297, 2, 0, 1492},
  {1301, 2, 0, 1495},
  {1303, 2, 0, 1498},
  {1307, 2, 0, 1501},
  {1319, 2, 0, 1504},
  {1321, 2, 0, 1507},
  {1327, 2, 0, 1510},
  {1361, 2, 0, 1513},
  {1367, 2, 0, 1516},
  {1373, 2, 0, 1519},
  {1381, 2, 0, 1522},
  {1399, 2, 0, 1525},
  {1409, 2, 0, 1528},
  {1423, 2, 0, 1531},
  {1427, 2, 0, 1534},
  {1429, 2, 0, 1537},
  {1433, 2, 0, 1540},
  {1439, 2, 0, 1543},
  {1447, 2, 0, 1546},
  {1451, 2, 0, 1549},
  {1453, 2, 0, 1552},
  {1459, 2, 0, 1555},
  {1471, 2, 0, 1558},
  {1481, 2, 0, 1561},
  {1483, 2, 0, 1564},
  {1487, 2, 0, 1567},
  {1489, 2, 0, 1570},
  {1493, 2, 0, 1573},
  {1499, 2, 0, 1576},
  {1511, 2, 0, 1579},
  {1523, 2, 0, 1582},
  {1531, 2, 0, 1585},
  {1543, 2, 0, 1588},
  {1549, 2, 0, 1591},
  {1553, 2, 0, 1594},
  {1559, 2, 0, 1597},
  {1567, 2, 0, 1600},
  {1571, 2, 0, 1603},
  {1579, 2, 0, 1606},
  {1583, 2, 0, 1609},
  {1597, 2, 0, 1612},
  {1601, 2, 0, 1615},
  {1607, 2, 0, 1618},
  {1609, 2, 0, 1621},
  {1613, 2, 0, 1624},
  {1619, 2, 0, 1627},
  {1621, 2, 0, 1630},
  {1627, 2, 0, 1633},
  {1637, 2, 0, 1636},
  {1657, 2, 0, 1639},
  {1663, 2, 0, 1642},
  {1667, 2, 0, 1645},
  {1669, 2, 0, 1648},
  {1693, 2, 0, 1651},
  {1697, 2, 0, 1654},
  {1699, 2, 0, 1657},
  {1709, 2, 0, 1660},
  {1721, 2, 0, 1663},
  {1723, 2, 0, 1666},
  {1733, 2, 0, 1669},
  {1741, 2, 0, 1672},
  {1747, 2, 0, 1675},
  {1753, 2, 0, 1678},
  {1759, 2, 0, 1681},
  {1777, 2, 0, 1684},
  {1783, 2, 0, 1687},
  {1787, 2, 0, 1690},
  {1789, 2, 0, 1693},
  {1801, 2, 0, 1696},
  {1811, 2, 0, 1699},
  {1823, 2, 0, 1702},
  {1831, 2, 0, 1705},
  {1847, 2, 0, 1708},
  {1861, 2, 0, 1711},
  {1867, 2, 0, 1714},
  {1871, 2, 0, 1717},
  {1873, 2, 0, 1720},
  {1877, 2, 0, 1723},
  {1879, 2, 0, 1726},
  {1889, 2, 0, 1729},
  {1901, 2, 0, 1732},
  {1907, 2, 0, 1735},
  {1913, 2, 0, 1738},
  {1931, 2, 0, 1741},
  {1933, 2, 0, 1744},
  {1949, 2, 0, 1747},
  {1951, 2, 0, 1750},
  {1973, 2, 0, 1753},
  {1979, 2, 0, 1756},
  {1987, 2, 0, 1759},
  {1993, 2, 0, 1762},
  {1997, 2, 0, 1765},
  {1999, 2, 0, 1768},
  {2003, 2, 0, 1771},
  {2011, 2, 0, 1774},
  {2017, 2, 0, 1777},
  {2027, 2, 0, 1780},
  {2029, 2, 0, 1783},
  {2039, 2, 0, 1786},
  {2053, 2, 0, 1789},
  {2063, 2, 0, 1792},
  {2069, 2, 0, 1795},
  {2081, 2, 0, 1798},
  {2083, 2, 0, 1801},
  {2087, 2, 0, 1804},
  {2089, 2, 0, 1807},
  {2099, 2, 0, 1810},
  {2111, 2, 0, 1813},
  {2113, 2, 0, 1816},
  {2129, 2, 0, 1819},
  {2131, 2, 0, 1822},
  {2137, 2, 0, 1825},
  {2141, 2, 0, 1828},
  {2143, 2, 0, 1831},
  {2153, 2, 0, 1834},
  {2161, 2, 0, 1837},
  {2179, 2, 0, 1840},
  {2203, 2, 0, 1843},
  {2207, 2, 0, 1846},
  {2213, 2, 0, 1849},
  {2221, 2, 0, 1852},
  {2237, 2, 0, 1855},
  {2239, 2, 0, 1858},
  {2243, 2, 0, 1861},
  {2251, 2, 0, 1864},
  {2267, 2, 0, 1867},
  {2269, 2, 0, 1870},
  {2273, 2, 0, 1873},
  {2281, 2, 0, 1876},
  {2287, 2, 0, 1879},
  {2293, 2, 0, 1882},
  {2297, 2, 0, 1885},
  {2309, 2, 0, 1888},
  {2311, 2, 0, 1891},
  {2333, 2, 0, 1894},
  {2339, 2, 0, 1897},
  {2341, 2, 0, 1900},
  {2347, 2, 0, 1903},
  {2351, 2, 0, 1906},
  {2357, 2, 0, 1909},
  {2371, 2, 0, 1912},
  {2377, 2, 0, 1915},
  {2381, 2, 0, 1918},
  {2383, 2, 0, 1921},
  {2389, 2, 0, 1924},
  {2393, 2, 0, 1927},
  {2399, 2, 0, 1930},
  {2411, 2, 0, 1933},
  {2417, 2, 0, 1936},
  {2423, 2, 0, 1939},
  {2437, 2, 0, 1942},
  {2441, 2, 0, 1945},
  {2447, 2, 0, 1948},
  {2459, 2, 0, 1951},
  {2467, 2, 0, 1954},
  {2473, 2, 0, 1957},
  {2477, 2, 0, 1960},
  {2503, 2, 0, 1963},
  {2521, 2, 0, 1966},
  {2531, 2, 0, 1969},
  {2539, 2, 0, 1972},
  {2543, 2, 0, 1975},
  {2549, 2, 0, 1978},
  {2551, 2, 0, 1981},
  {2557, 2, 0, 1984},
  {2579, 2, 0, 1987},
  {2591, 2, 0, 1990},
  {2593, 2, 0, 1993},
  {2609, 2, 0, 1996},
  {2617, 2, 0, 1999},
  {2621, 2, 0, 2002},
  {2633, 2, 0, 2005},
  {2647, 2, 0, 2008},
  {2657, 2, 0, 2011},
  {2659, 2, 0, 2014},
  {2663, 2, 0, 2017},
  {2671, 2, 0, 2020},
  {2677, 2, 0, 2023},
  {2683, 2, 0, 2026},
  {2687, 2, 0, 2029},
  {2689, 2, 0, 2032},
  {2693, 2, 0, 2035},
  {2699, 2, 0, 2038},
  {2707, 2, 0, 2041},
  {2711, 2, 0, 2044},
  {2713, 2, 0, 2047},
  {2719, 2, 0, 2050},
  {2729, 2, 0, 2053},
  {2731, 2, 0, 2056},
  {2741, 2, 0, 2059},
  {2749, 2, 0, 2062},
  {2753, 2, 0, 2065},
  {2767, 2, 0, 2068},
  {2777, 2, 0, 2071},
  {2789, 2, 0, 2074},
  {2791, 2, 0, 2077},
  {2797, 2, 0, 2080},
  {2801, 2, 0, 2083},
  {2803, 2, 0, 2086},
  {2819, 2, 0, 2089},
  {2833, 2, 0, 2092},
  {2837, 2, 0, 2095},
  {2843, 2, 0, 2098},
  {2851, 2, 0, 2101},
  {2857, 2, 0, 2104},
  {2861, 2, 0, 2107},
  {2879, 2, 0, 2110},
  {2887, 2, 0, 2113},
  {2897, 2, 0, 2116},
  {2903, 2, 0, 2119},
  {2909, 2, 0, 2122},
  {2917, 2, 0, 2125},
  {2927, 2, 0, 2128},
  {2939, 2, 0, 2131},
  {2953, 2, 0, 2134},
  {2957, 2, 0, 2137},
  {2963, 2, 0, 2140},
  {2969, 2, 0, 2143},
  {2971, 2, 0, 2146},
  {2999, 2, 0, 2149},
  {3001, 2, 0, 2152},
  {3011, 2, 0, 2155},
  {3019, 2, 0, 2158},
  {3023, 2, 0, 2161},
  {3037, 2, 0, 2164},
  {3041, 2, 0, 2167},
  {3049, 2, 0, 2170},
  {3061, 2, 0, 2173},
  {3067, 2, 0, 2176},
  {3079, 2, 0, 2179},
  {3083, 2, 0, 2182},
  {3089, 2, 0, 2185},
  {3109, 2, 0, 2188},
  {3119, 2, 0, 2191},
  {3121, 2, 0, 2194},
  {3137, 2, 0, 2197},
  {3163, 2, 0, 2200},
  {3167, 2, 0, 2203},
  {3169, 2, 0, 2206},
  {3181, 2, 0, 2209},
  {3187, 2, 0, 2212},
  {3191, 2, 0, 2215},
  {3203, 2, 0, 2218},
  {3209, 2, 0, 2221},
  {3217, 2, 0, 2224},
  {3221, 2, 0, 2227},
  {3229, 2, 0, 2230},
  {3251, 2, 0, 2233},
  {3253, 2, 0, 2236},
  {3257, 2, 0, 2239},
  {3259, 2, 0, 2242},
  {3271, 2, 0, 2245},
  {3299, 2, 0, 2248},
  {3301, 2, 0, 2251},
  {3307, 2, 0, 2254},
  {3313, 2, 0, 2257},
  {3319, 2, 0, 2260},
  {3323, 2, 0, 2263},
  {3329, 2, 0, 2266},
  {3331, 2, 0, 2269},
  {3343, 2, 0, 2272},
  {3347, 2, 0, 2275},
  {3359, 2, 0, 2278},
  {3361, 2, 0, 2281},
  {3371, 2, 0, 2284},
  {3373, 2, 0, 2287},
  {3389, 2, 0, 2290},
  {3391, 2, 0, 2293},
  {3407, 2, 0, 2296},
  {3413, 2, 0, 2299},
  {3433, 2, 0, 2302},
  {3449, 2, 0, 2305},
  {3457, 2, 0, 2308},
  {3461, 2, 0, 2311},
  {3463, 2, 0, 2314},
  {3467, 2, 0, 2317},
  {3469, 2, 0, 2320},
  {3491, 2, 0, 2323},
  {3499, 2, 0, 2326},
  {3511, 2, 0, 2329},
  {3517, 2, 0, 2332},
  {3527, 2, 0, 2335},
  {3529, 2, 0, 2338},
  {3533, 2, 0, 2341},
  {3539, 2, 0, 2344},
  {3541, 2, 0, 2347},
  {3547, 2, 0, 2350},
  {3557, 2, 0, 2353},
  {3559, 2, 0, 2356},
  {3571, 2, 0, 2359},
  {3581, 2, 0, 2362},
  {3583, 2, 0, 2365},
  {3593, 2, 0, 2368},
  {3607, 2, 0, 2371},
  {3613, 2, 0, 2374},
  {3617, 2, 0, 2377},
  {3623, 2, 0, 2380},
  {3631, 2, 0, 2383},
  {3637, 2, 0, 2386},
  {3643, 2, 0, 2389},
  {3659, 2, 0, 2392},
  {3671, 2, 0, 2395},
  {3673, 2, 0, 2398},
  {3677, 2, 0, 2401},
  {3691, 2, 0, 2404},
  {3697, 2, 0, 2407},
  {3701, 2, 0, 2410},
  {3709, 2, 0, 2413},
  {3719, 2, 0, 2416},
  {3727, 2, 0, 2419},
  {3733, 2, 0, 2422},
  {3739, 2, 0, 2425},
  {3761, 2, 0, 2428},
  {3767, 2, 0, 2431},
  {3769, 2, 0, 2434},
  {3779, 2, 0, 2437},
  {3793, 2, 0, 2440},
  {3797, 2, 0, 2443},
  {3803, 2, 0, 2446},
  {3821, 2, 0, 2449},
  {3823, 2, 0, 2452},
  {3833, 2, 0, 2455},
  {3847, 2, 0, 2458},
  {3851, 2, 0, 2461},
  {3853, 2, 0, 2464},
  {3863, 2, 0, 2467},
  {3877, 2, 0, 2470},
  {3881, 2, 0, 2473},
  {3889, 2, 0, 2476},
  {3907, 2, 0, 2479},
  {3911, 2, 0, 2482},
  {3917, 2, 0, 2485},
  {3919, 2, 0, 2488},
  {3923, 2, 0, 2491},
  {3929, 2, 0, 2494},
  {3931, 2, 0, 2497},
  {3943, 2, 0, 2500},
  {3947, 2, 0, 2503},
  {3967, 2, 0, 2506},
  {3989, 2, 0, 2509},
  {4001, 2, 0, 2512},
  {4003, 2, 0, 2515},
  {4007, 2, 0, 2518},
  {4013, 2, 0, 2521},
  {4019, 2, 0, 2524},
  {4021, 2, 0, 2527},
  {4027, 2, 0, 2530},
  {4049, 2, 0, 2533},
  {4051, 2, 0, 2536},
  {4057, 2, 0, 2539},
  {4073, 2, 0, 2542},
  {4079, 2, 0, 2545},
  {4091, 2, 0, 2548},
  {4093, 2, 0, 2551},
};
// clang-format on

}  // namespace

std::optional<std::vector<std::uint32_t>> conway_polynomial(std::uint64_t p, unsigned k) {
  const auto* it = std::lower_bound(std::begin(kEntries), std::end(kEntries), std::pair{p, k},
                                    [](const ConwayEntry& e, const std::pair<std::uint64_t, unsigned>& key) {
                                      return std::pair<std::uint64_t, unsigned>{e.p, e.k} < key;
                                    });
  if (it == std::end(kEntries) || it->p != p || it->k != k) return std::nullopt;
  const std::size_t offset = (std::size_t{it->offset_hi} << 16) | it->offset_lo;
  return std::vector<std::uint32_t>(kCoeffs + offset, kCoeffs + offset + k + 1);
}

std::size_t conway_table_size() { return std::size(kEntries); }

}  // namespace tsrforge
