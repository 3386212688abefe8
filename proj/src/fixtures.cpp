#include "waring/fixtures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "waring/csv.hpp"

namespace waring::fixtures {

namespace {

// Recursion steps, ordered by k then s. theta and delta carry the printed
// six-decimal values; parameter rows of all zeros mean the step was run
// with no tuning.
const std::array<Row, 271> k_rows = {{
    {5, 3, {0.0, 0.0, 0.0, 0.0}, 0.125120, 2.333618},
    {5, 4, {0.0, 0.0, 0.0, 0.0}, 0.136680, 1.774482},
    {5, 5, {0.880, 0.0, -0.056800, 0.5003}, 0.000002, 1.214485},
    {5, 6, {0.918, 0.0, -0.038300, 0.5026}, 0.000005, 0.673494},
    {5, 7, {0.955, 0.0, -0.020800, 0.5014}, 0.000010, 0.151018},
    {5, 8, {-0.263, 0.341, -0.341000, 0.5000}, 0.143170, 0.000000},

    {6, 3, {0.0, 0.0, 0.0, 0.0}, 0.100009, 3.272749},
    {6, 4, {0.0, 0.0, 0.0, 0.0}, 0.107879, 2.635686},
    {6, 5, {0.0, 0.0, 0.0, 0.0}, 0.115887, 2.088927},
    {6, 6, {0.883, 0.0, -0.021500, 0.4976}, 0.000554, 1.531434},
    {6, 7, {0.914, 0.0, -0.015233, 0.5025}, 0.000889, 0.990449},
    {6, 8, {0.944, 0.0, -0.010133, 0.4956}, 0.002130, 0.468199},

    {7, 3, {0.0, 0.0, 0.0, 0.0}, 0.083334, 4.230771},
    {7, 4, {0.0, 0.0, 0.0, 0.0}, 0.089044, 3.538957},
    {7, 5, {0.0, 0.0, 0.0, 0.0}, 0.094897, 2.925605},
    {7, 6, {0.860, 0.0, -0.043300, 0.5047}, 0.000172, 2.355885},
    {7, 7, {0.887, 0.0, -0.035286, 0.5038}, 0.000423, 1.800272},
    {7, 8, {0.914, 0.0, -0.026471, 0.5050}, 0.000009, 1.257295},

    {8, 3, {0.0, 0.0, 0.0, 0.0}, 0.071429, 5.200000},
    {8, 4, {0.0, 0.0, 0.0, 0.0}, 0.075758, 4.467607},
    {8, 5, {0.0, 0.0, 0.0, 0.0}, 0.080209, 3.804151},
    {8, 6, {0.0, 0.0, 0.0, 0.0}, 0.084719, 3.209961},
    {8, 7, {0.866, 0.0, -0.017650, 0.5032}, 0.000114, 2.643177},
    {8, 8, {0.889, 0.0, -0.015175, 0.4957}, 0.001141, 2.090363},

    {9, 3, {0.0, 0.0, 0.0, 0.0}, 0.062500, 6.176471},
    {9, 4, {0.0, 0.0, 0.0, 0.0}, 0.065891, 5.412834},
    {9, 5, {0.0, 0.0, 0.0, 0.0}, 0.069383, 4.710455},
    {9, 6, {0.0, 0.0, 0.0, 0.0}, 0.072937, 4.070034},
    {9, 7, {0.0, 0.0, 0.0, 0.0}, 0.076512, 3.491500},
    {9, 8, {0.870, 0.0, -0.030689, 0.5031}, 0.000616, 2.927829},
    {9, 9, {0.891, 0.0, -0.026822, 0.4983}, 0.000601, 2.374900},
    {9, 10, {0.912, 0.0, -0.021956, 0.4957}, 0.000007, 1.830920},
    {9, 11, {0.932, 0.0, -0.015811, 0.5044}, 0.000204, 1.297635},
    {9, 12, {0.951, 0.0, -0.012389, 0.4969}, 0.003570, 0.787178},
    {9, 13, {0.970, 0.027, -0.000767, 0.4965}, 0.000562, 0.288121},
    {9, 14, {-0.979, 1.099, -2.198000, 0.2000}, 0.048628, 0.000000},

    {10, 3, {0.0, 0.0, 0.0, 0.0}, 0.055556, 7.157895},
    {10, 4, {0.0, 0.0, 0.0, 0.0}, 0.058282, 6.369489},
    {10, 5, {0.0, 0.0, 0.0, 0.0}, 0.061089, 5.636078},
    {10, 6, {0.0, 0.0, 0.0, 0.0}, 0.063955, 4.958505},
    {10, 7, {0.0, 0.0, 0.0, 0.0}, 0.066852, 4.337081},
    {10, 8, {0.0, 0.0, 0.0, 0.0}, 0.069750, 3.771515},
    {10, 9, {0.874, 0.0, -0.013900, 0.4958}, 0.000287, 3.209210},
    {10, 10, {0.893, 0.0, -0.011400, 0.5004}, 0.000009, 2.655736},
    {10, 11, {0.911, 0.0, -0.009500, 0.4982}, 0.000978, 2.114493},
    {10, 12, {0.929, 0.0, -0.007700, 0.4959}, 0.001400, 1.584271},
    {10, 13, {0.947, 0.0, -0.005800, 0.4962}, 0.000595, 1.060272},
    {10, 14, {0.964, 0.035, -0.000100, 0.5023}, 0.000122, 0.560337},
    {10, 15, {0.981, 0.018, -0.000100, 0.5025}, 0.000213, 0.060908},
    {10, 16, {-0.016, 0.113, -0.452000, 0.4000}, 0.088352, 0.000000},

    {11, 3, {0.0, 0.0, 0.0, 0.0}, 0.050000, 8.142857},
    {11, 4, {0.0, 0.0, 0.0, 0.0}, 0.052239, 7.334347},
    {11, 5, {0.0, 0.0, 0.0, 0.0}, 0.054542, 6.575661},
    {11, 6, {0.0, 0.0, 0.0, 0.0}, 0.056897, 5.867674},
    {11, 7, {0.0, 0.0, 0.0, 0.0}, 0.059285, 5.210882},
    {11, 8, {0.0, 0.0, 0.0, 0.0}, 0.061687, 4.605349},
    {11, 9, {0.860, 0.0, -0.027455, 0.4994}, 0.000471, 4.036402},
    {11, 10, {0.877, 0.0, -0.025264, 0.4954}, 0.000950, 3.477465},
    {11, 11, {0.894, 0.0, -0.020873, 0.4994}, 0.001014, 2.927664},
    {11, 12, {0.911, 0.0, -0.017982, 0.4966}, 0.000475, 2.384876},
    {11, 13, {0.927, 0.0, -0.014773, 0.4973}, 0.001953, 1.856275},
    {11, 14, {0.943, 0.0, -0.011764, 0.4957}, 0.002733, 1.340002},
    {11, 15, {0.959, 0.0, -0.008155, 0.4989}, 0.001844, 0.828531},
    {11, 16, {0.974, 0.025, -0.000182, 0.5050}, 0.000385, 0.330075},
    {11, 17, {-0.754, 1.129, -1.129000, 0.2000}, 0.031850, 0.000000},

    {12, 3, {0.0, 0.0, 0.0, 0.0}, 0.045455, 9.130435},
    {12, 4, {0.0, 0.0, 0.0, 0.0}, 0.047325, 8.305287},
    {12, 5, {0.0, 0.0, 0.0, 0.0}, 0.049248, 7.525642},
    {12, 6, {0.0, 0.0, 0.0, 0.0}, 0.051215, 6.792350},
    {12, 7, {0.0, 0.0, 0.0, 0.0}, 0.053213, 6.105989},
    {12, 8, {0.0, 0.0, 0.0, 0.0}, 0.055230, 5.466819},
    {12, 9, {0.0, 0.0, 0.0, 0.0}, 0.057251, 4.874750},
    {12, 10, {0.864, 0.0, -0.012033, 0.4983}, 0.000925, 4.309069},
    {12, 11, {0.880, 0.0, -0.010300, 0.5014}, 0.000489, 3.750520},
    {12, 12, {0.895, 0.0, -0.009250, 0.4978}, 0.001785, 3.204134},
    {12, 13, {0.910, 0.0, -0.008100, 0.4955}, 0.002725, 2.669679},
    {12, 14, {0.925, 0.0, -0.006450, 0.4994}, 0.002776, 2.144131},
    {12, 15, {0.940, 0.0, -0.005400, 0.4960}, 0.001642, 1.621911},
    {12, 16, {0.954, 0.045, -0.000083, 0.5008}, 0.000115, 1.122003},
    {12, 17, {0.968, 0.031, -0.000083, 0.5000}, 0.000206, 0.622652},
    {12, 18, {0.982, 0.017, -0.000083, 0.4979}, 0.000523, 0.125282},
    {12, 19, {-0.240, 0.293, -2.344000, 0.1000}, 0.063111, 0.000000},

    {13, 3, {0.0, 0.0, 0.0, 0.0}, 0.041667, 10.120000},
    {13, 4, {0.0, 0.0, 0.0, 0.0}, 0.043253, 9.280862},
    {13, 5, {0.0, 0.0, 0.0, 0.0}, 0.044882, 8.483567},
    {13, 6, {0.0, 0.0, 0.0, 0.0}, 0.046547, 7.728921},
    {13, 7, {0.0, 0.0, 0.0, 0.0}, 0.048242, 7.017526},
    {13, 8, {0.0, 0.0, 0.0, 0.0}, 0.049956, 6.349748},
    {13, 9, {0.0, 0.0, 0.0, 0.0}, 0.051680, 5.725686},
    {13, 10, {0.0, 0.0, 0.0, 0.0}, 0.053403, 5.145155},
    {13, 11, {0.868, 0.0, -0.022808, 0.4951}, 0.000068, 4.579344},
    {13, 12, {0.882, 0.0, -0.018754, 0.5023}, 0.000990, 4.023554},
    {13, 13, {0.896, 0.0, -0.018200, 0.4950}, 0.001718, 3.477907},
    {13, 14, {0.910, 0.0, -0.015646, 0.4956}, 0.002021, 2.941283},
    {13, 15, {0.924, 0.0, -0.012592, 0.4993}, 0.001641, 2.410802},
    {13, 16, {0.938, 0.0, -0.010038, 0.5006}, 0.000559, 1.882609},
    {13, 17, {0.951, 0.0, -0.008438, 0.4967}, 0.003493, 1.377114},
    {13, 18, {0.964, 0.035, -0.000154, 0.5050}, 0.000142, 0.877448},
    {13, 19, {0.977, 0.022, -0.000154, 0.5050}, 0.000253, 0.378536},
    {13, 20, {-0.030, 0.765, -1.530000, 0.1000}, 0.019247, 0.000000},

    {14, 3, {0.0, 0.0, 0.0, 0.0}, 0.038462, 11.111111},
    {14, 4, {0.0, 0.0, 0.0, 0.0}, 0.039823, 10.260047},
    {14, 5, {0.0, 0.0, 0.0, 0.0}, 0.041220, 9.447694},
    {14, 6, {0.0, 0.0, 0.0, 0.0}, 0.042648, 8.674803},
    {14, 7, {0.0, 0.0, 0.0, 0.0}, 0.044102, 7.941973},
    {14, 8, {0.0, 0.0, 0.0, 0.0}, 0.045575, 7.249620},
    {14, 9, {0.0, 0.0, 0.0, 0.0}, 0.047060, 6.597958},
    {14, 10, {0.0, 0.0, 0.0, 0.0}, 0.048549, 5.986978},
    {14, 11, {0.857, 0.0, -0.011014, 0.4971}, 0.000726, 5.417353},
    {14, 12, {0.871, 0.0, -0.009614, 0.5004}, 0.000016, 4.852901},
    {14, 13, {0.884, 0.0, -0.009086, 0.4957}, 0.000925, 4.298151},
    {14, 14, {0.897, 0.0, -0.008057, 0.4952}, 0.001562, 3.752850},
    {14, 15, {0.910, 0.0, -0.006829, 0.4974}, 0.001800, 3.215793},
    {14, 16, {0.923, 0.0, -0.006000, 0.4957}, 0.001369, 2.683939},
    {14, 17, {0.936, 0.0, -0.004571, 0.5030}, 0.000298, 2.153515},
    {14, 18, {0.948, 0.0, -0.004014, 0.4953}, 0.003702, 1.648671},
    {14, 19, {0.960, 0.039, -0.000071, 0.5005}, 0.000123, 1.148927},
    {14, 20, {0.972, 0.027, -0.000071, 0.4999}, 0.000213, 0.649823},
    {14, 21, {0.984, 0.015, -0.000071, 0.4986}, 0.000507, 0.152854},
    {14, 22, {0.112, 0.257, -0.771000, 0.1000}, 0.050140, 0.000000},

    {15, 3, {0.0, 0.0, 0.0, 0.0}, 0.035714, 12.103448},
    {15, 4, {0.0, 0.0, 0.0, 0.0}, 0.036896, 11.242099},
    {15, 5, {0.0, 0.0, 0.0, 0.0}, 0.038107, 10.416751},
    {15, 6, {0.0, 0.0, 0.0, 0.0}, 0.039344, 9.628104},
    {15, 7, {0.0, 0.0, 0.0, 0.0}, 0.040604, 8.876733},
    {15, 8, {0.0, 0.0, 0.0, 0.0}, 0.041882, 8.163076},
    {15, 9, {0.0, 0.0, 0.0, 0.0}, 0.043172, 7.487410},
    {15, 10, {0.0, 0.0, 0.0, 0.0}, 0.044469, 6.849842},
    {15, 11, {0.0, 0.0, 0.0, 0.0}, 0.045767, 6.250290},
    {15, 12, {0.861, 0.0, -0.020633, 0.4959}, 0.000129, 5.681159},
    {15, 13, {0.873, 0.0, -0.019233, 0.4951}, 0.001341, 5.122124},
    {15, 14, {0.886, 0.0, -0.017100, 0.4953}, 0.000286, 4.566206},
    {15, 15, {0.898, 0.0, -0.014900, 0.4975}, 0.001170, 4.020171},
    {15, 16, {0.910, 0.0, -0.013100, 0.4979}, 0.001744, 3.483353},
    {15, 17, {0.922, 0.0, -0.010800, 0.5013}, 0.001822, 2.953704},
    {15, 18, {0.934, 0.0, -0.009800, 0.4964}, 0.001250, 2.427663},
    {15, 19, {0.946, 0.0, -0.007800, 0.4978}, 0.000177, 1.901726},
    {15, 20, {0.957, 0.042, -0.000133, 0.5043}, 0.000100, 1.401870},
    {15, 21, {0.968, 0.031, -0.000133, 0.5045}, 0.000204, 0.902767},
    {15, 22, {0.979, 0.020, -0.000133, 0.5045}, 0.000484, 0.405774},
    {15, 23, {-0.940, 1.559, -1.559000, 0.1000}, 0.012913, 0.000000},

    {16, 3, {0.0, 0.0, 0.0, 0.0}, 0.033333, 13.096774},
    {16, 4, {0.0, 0.0, 0.0, 0.0}, 0.034368, 12.226463},
    {16, 5, {0.0, 0.0, 0.0, 0.0}, 0.035428, 11.389793},
    {16, 6, {0.0, 0.0, 0.0, 0.0}, 0.036510, 10.587406},
    {16, 7, {0.0, 0.0, 0.0, 0.0}, 0.037612, 9.819853},
    {16, 8, {0.0, 0.0, 0.0, 0.0}, 0.038730, 9.087570},
    {16, 9, {0.0, 0.0, 0.0, 0.0}, 0.039860, 8.390873},
    {16, 10, {0.0, 0.0, 0.0, 0.0}, 0.040999, 7.729937},
    {16, 11, {0.0, 0.0, 0.0, 0.0}, 0.042141, 7.104789},
    {16, 12, {0.0, 0.0, 0.0, 0.0}, 0.043281, 6.515297},
    {16, 13, {0.864, 0.0, -0.009200, 0.4971}, 0.000457, 5.948732},
    {16, 14, {0.876, 0.0, -0.007850, 0.5017}, 0.000112, 5.387136},
    {16, 15, {0.887, 0.0, -0.007662, 0.4961}, 0.001801, 4.837958},
    {16, 16, {0.899, 0.0, -0.007012, 0.4954}, 0.000493, 4.289686},
    {16, 17, {0.910, 0.0, -0.006025, 0.4969}, 0.001864, 3.753943},
    {16, 18, {0.921, 0.0, -0.005337, 0.4960}, 0.002735, 3.229219},
    {16, 19, {0.932, 0.0, -0.004450, 0.4980}, 0.002911, 2.712198},
    {16, 20, {0.943, 0.0, -0.003663, 0.4994}, 0.002371, 2.198531},
    {16, 21, {0.954, 0.0, -0.003075, 0.4974}, 0.001092, 1.682835},
    {16, 22, {0.964, 0.035, -0.000063, 0.4993}, 0.000185, 1.183647},
    {16, 23, {0.975, 0.024, -0.000063, 0.5007}, 0.000149, 0.684270},
    {16, 24, {0.985, 0.014, -0.000063, 0.4965}, 0.000708, 0.189388},
    {16, 25, {-0.380, 0.505, -0.505000, 0.0000}, 0.039292, 0.000000},

    {17, 3, {0.0, 0.0, 0.0, 0.0}, 0.031250, 14.090909},
    {17, 4, {0.0, 0.0, 0.0, 0.0}, 0.032164, 13.212722},
    {17, 5, {0.0, 0.0, 0.0, 0.0}, 0.033099, 12.366098},
    {17, 6, {0.0, 0.0, 0.0, 0.0}, 0.034053, 11.551631},
    {17, 7, {0.0, 0.0, 0.0, 0.0}, 0.035024, 10.769837},
    {17, 8, {0.0, 0.0, 0.0, 0.0}, 0.036010, 10.021148},
    {17, 9, {0.0, 0.0, 0.0, 0.0}, 0.037008, 9.305892},
    {17, 10, {0.0, 0.0, 0.0, 0.0}, 0.038014, 8.624289},
    {17, 11, {0.0, 0.0, 0.0, 0.0}, 0.039025, 7.976438},
    {17, 12, {0.0, 0.0, 0.0, 0.0}, 0.040038, 7.362309},
    {17, 13, {0.0, 0.0, 0.0, 0.0}, 0.041047, 6.781738},
    {17, 14, {0.867, 0.0, -0.016347, 0.4998}, 0.000040, 6.215376},
    {17, 15, {0.878, 0.0, -0.015953, 0.4962}, 0.000215, 5.655212},
    {17, 16, {0.889, 0.0, -0.013559, 0.5003}, 0.000208, 5.100615},
    {17, 17, {0.899, 0.0, -0.013582, 0.4951}, 0.002519, 4.562197},
    {17, 18, {0.910, 0.0, -0.012088, 0.4950}, 0.001501, 4.025063},
    {17, 19, {0.921, 0.0, -0.010294, 0.4964}, 0.000197, 3.486681},
    {17, 20, {0.931, 0.0, -0.009018, 0.4968}, 0.002367, 2.966667},
    {17, 21, {0.941, 0.0, -0.007641, 0.4976}, 0.003601, 2.460723},
    {17, 22, {0.951, 0.048, -0.000118, 0.5033}, 0.000081, 1.960788},
    {17, 23, {0.961, 0.038, -0.000118, 0.5033}, 0.000094, 1.460982},
    {17, 24, {0.971, 0.028, -0.000118, 0.5032}, 0.000110, 0.961336},
    {17, 25, {0.981, 0.018, -0.000118, 0.5030}, 0.000109, 0.461726},
    {17, 26, {-0.231, 1.132, -1.132000, 0.0000}, 0.004629, 0.000000},

    {18, 3, {0.0, 0.0, 0.0, 0.0}, 0.029412, 15.085714},
    {18, 4, {0.0, 0.0, 0.0, 0.0}, 0.030225, 14.200551},
    {18, 5, {0.0, 0.0, 0.0, 0.0}, 0.031055, 13.345110},
    {18, 6, {0.0, 0.0, 0.0, 0.0}, 0.031903, 12.519940},
    {18, 7, {0.0, 0.0, 0.0, 0.0}, 0.032765, 11.725526},
    {18, 8, {0.0, 0.0, 0.0, 0.0}, 0.033641, 10.962283},
    {18, 9, {0.0, 0.0, 0.0, 0.0}, 0.034528, 10.230544},
    {18, 10, {0.0, 0.0, 0.0, 0.0}, 0.035423, 9.530554},
    {18, 11, {0.0, 0.0, 0.0, 0.0}, 0.036323, 8.862459},
    {18, 12, {0.0, 0.0, 0.0, 0.0}, 0.037227, 8.226302},
    {18, 13, {0.0, 0.0, 0.0, 0.0}, 0.038130, 7.622011},
    {18, 14, {0.858, 0.0, -0.008589, 0.4962}, 0.001639, 7.056290},
    {18, 15, {0.869, 0.0, -0.007778, 0.4978}, 0.000652, 6.493195},
    {18, 16, {0.879, 0.0, -0.007422, 0.4954}, 0.001725, 5.939850},
    {18, 17, {0.890, 0.0, -0.006611, 0.4977}, 0.000021, 5.384946},
    {18, 18, {0.900, 0.0, -0.006156, 0.4957}, 0.000740, 4.838690},
    {18, 19, {0.910, 0.0, -0.005400, 0.4969}, 0.001186, 4.300227},
    {18, 20, {0.920, 0.0, -0.004844, 0.4963}, 0.001223, 3.767504},
    {18, 21, {0.930, 0.0, -0.003989, 0.5000}, 0.000880, 3.238129},
    {18, 22, {0.940, 0.0, -0.003433, 0.5003}, 0.000137, 2.709063},
    {18, 23, {0.949, 0.050, -0.000056, 0.5002}, 0.000087, 2.209196},
    {18, 24, {0.959, 0.0, -0.002378, 0.4992}, 0.000561, 1.693003},
    {18, 25, {0.968, 0.031, -0.000056, 0.4998}, 0.000167, 1.193857},
    {18, 26, {0.977, 0.022, -0.000056, 0.4979}, 0.000379, 0.696585},
    {18, 27, {0.987, 0.012, -0.000056, 0.5010}, 0.000169, 0.197589},
    {18, 28, {0.455, 0.205, -0.205000, 0.0000}, 0.033974, 0.000000},

    {19, 3, {0.0, 0.0, 0.0, 0.0}, 0.027778, 16.081081},
    {19, 4, {0.0, 0.0, 0.0, 0.0}, 0.028505, 15.189695},
    {19, 5, {0.0, 0.0, 0.0, 0.0}, 0.029249, 14.326392},
    {19, 6, {0.0, 0.0, 0.0, 0.0}, 0.030006, 13.491676},
    {19, 7, {0.0, 0.0, 0.0, 0.0}, 0.030777, 12.686002},
    {19, 8, {0.0, 0.0, 0.0, 0.0}, 0.031560, 11.909768},
    {19, 9, {0.0, 0.0, 0.0, 0.0}, 0.032352, 11.163303},
    {19, 10, {0.0, 0.0, 0.0, 0.0}, 0.033153, 10.446864},
    {19, 11, {0.0, 0.0, 0.0, 0.0}, 0.033959, 9.760628},
    {19, 12, {0.0, 0.0, 0.0, 0.0}, 0.034770, 9.104685},
    {19, 13, {0.0, 0.0, 0.0, 0.0}, 0.035581, 8.479035},
    {19, 14, {0.0, 0.0, 0.0, 0.0}, 0.036391, 7.883577},
    {19, 15, {0.861, 0.0, -0.016532, 0.4958}, 0.001265, 7.318508},
    {19, 16, {0.871, 0.0, -0.015479, 0.4953}, 0.001186, 6.758714},
    {19, 17, {0.881, 0.0, -0.014226, 0.4954}, 0.000908, 6.203235},
    {19, 18, {0.891, 0.0, -0.012874, 0.4959}, 0.000372, 5.650551},
    {19, 19, {0.900, 0.0, -0.011926, 0.4958}, 0.002300, 5.112825},
    {19, 20, {0.910, 0.0, -0.010774, 0.4953}, 0.000855, 4.572768},
    {19, 21, {0.919, 0.0, -0.009526, 0.4966}, 0.002538, 4.048059},
    {19, 22, {0.928, 0.0, -0.008479, 0.4967}, 0.003560, 3.535730},
    {19, 23, {0.937, 0.0, -0.007132, 0.4989}, 0.003985, 3.032388},
    {19, 24, {0.946, 0.053, -0.000105, 0.5027}, 0.000072, 2.532426},
    {19, 25, {0.955, 0.044, -0.000105, 0.5026}, 0.000075, 2.032521},
    {19, 26, {0.964, 0.035, -0.000105, 0.5025}, 0.000071, 1.532609},
    {19, 27, {0.973, 0.0, -0.003242, 0.4952}, 0.001062, 1.028379},
    {19, 28, {0.981, 0.018, -0.000105, 0.5028}, 0.000533, 0.532755},
    {19, 29, {0.990, 0.009, -0.000105, 0.5028}, 0.001153, 0.043264},
    {19, 30, {-0.055, 0.087, -0.087000, 0.0000}, 0.048187, 0.000001},

    {20, 3, {0.0, 0.0, 0.0, 0.0}, 0.026316, 17.076923},
    {20, 4, {0.0, 0.0, 0.0, 0.0}, 0.026971, 16.179953},
    {20, 5, {0.0, 0.0, 0.0, 0.0}, 0.027640, 15.309594},
    {20, 6, {0.0, 0.0, 0.0, 0.0}, 0.028321, 14.466313},
    {20, 7, {0.0, 0.0, 0.0, 0.0}, 0.029014, 13.650536},
    {20, 8, {0.0, 0.0, 0.0, 0.0}, 0.029717, 12.862638},
    {20, 9, {0.0, 0.0, 0.0, 0.0}, 0.030430, 12.102943},
    {20, 10, {0.0, 0.0, 0.0, 0.0}, 0.031150, 11.371713},
    {20, 11, {0.0, 0.0, 0.0, 0.0}, 0.031876, 10.669142},
    {20, 12, {0.0, 0.0, 0.0, 0.0}, 0.032606, 9.995354},
    {20, 13, {0.0, 0.0, 0.0, 0.0}, 0.033338, 9.350396},
    {20, 14, {0.0, 0.0, 0.0, 0.0}, 0.034071, 8.734233},
    {20, 15, {0.0, 0.0, 0.0, 0.0}, 0.034802, 8.146746},
    {20, 16, {0.864, 0.0, -0.007700, 0.4950}, 0.000432, 7.580378},
    {20, 17, {0.873, 0.0, -0.007050, 0.4955}, 0.001458, 7.023069},
    {20, 18, {0.882, 0.0, -0.006300, 0.4973}, 0.002298, 6.474881},
    {20, 19, {0.892, 0.0, -0.005900, 0.4970}, 0.000196, 5.921891},
    {20, 20, {0.901, 0.0, -0.005550, 0.4953}, 0.000847, 5.377146},
    {20, 21, {0.910, 0.0, -0.004900, 0.4966}, 0.001168, 4.839226},
    {20, 22, {0.919, 0.0, -0.004350, 0.4973}, 0.001180, 4.306403},
    {20, 23, {0.928, 0.0, -0.003800, 0.4984}, 0.000878, 3.776499},
    {20, 24, {0.937, 0.0, -0.003250, 0.4999}, 0.000231, 3.246707},
    {20, 25, {0.945, 0.054, -0.000050, 0.5000}, 0.000080, 2.746829},
    {20, 26, {0.954, 0.0, -0.002500, 0.4967}, 0.001356, 2.234984},
    {20, 27, {0.962, 0.037, -0.000050, 0.4997}, 0.000137, 1.735664},
    {20, 28, {0.971, 0.0, -0.001550, 0.4979}, 0.000711, 1.227609},
    {20, 29, {0.979, 0.020, -0.000050, 0.4992}, 0.000303, 0.729986},
    {20, 30, {0.987, 0.012, -0.000050, 0.4954}, 0.000844, 0.237836},
    {20, 31, {-0.377, 0.640, -0.640000, 0.0000}, 0.026532, 0.000000},
}};

const std::array<FinalDelta, 16> k_final = {{
    {5, 8, 0.000000},
    {6, 9, 0.000000},
    {7, 11, 0.000000},
    {8, 12, 0.006974},
    {9, 14, 0.000000},
    {10, 16, 0.000000},
    {11, 17, 0.000000},
    {12, 19, 0.000000},
    {13, 20, 0.000000},
    {14, 22, 0.000000},
    {15, 23, 0.000000},
    {16, 25, 0.000000},
    {17, 26, 0.000000},
    {18, 28, 0.000000},
    {19, 30, 0.000001},
    {20, 31, 0.000000},
}};

const std::array<GBound, 16> k_gbounds = {{
    {5, 17},  {6, 19},  {7, 23},  {8, 32},
    {9, 29},  {10, 33}, {11, 35}, {12, 39},
    {13, 41}, {14, 45}, {15, 47}, {16, 64},
    {17, 53}, {18, 57}, {19, 61}, {20, 63},
}};

const std::array<BoundOffset, 16> k_offsets = {{
    {5, 1},  {6, 1},  {7, 1},  {8, 8},
    {9, 1},  {10, 1}, {11, 1}, {12, 1},
    {13, 1}, {14, 1}, {15, 1}, {16, 14},
    {17, 1}, {18, 1}, {19, 1}, {20, 1},
}};

// Interval values on X_d = [1.6e9 * d, 3.2e9 * d]; only printed cells.
const std::array<IntervalG, 24> k_interval = {{
    {1, 5, 9},   {1, 6, 15},  {1, 7, 20},
    {2, 7, 19},
    {3, 7, 19},
    {4, 7, 18},
    {7, 5, 9},   {7, 6, 14},  {7, 7, 18},
    {8, 5, 9},   {8, 6, 14},  {8, 7, 18},
    {9, 5, 9},   {9, 6, 14},  {9, 7, 17},
    {28, 5, 9},  {28, 6, 14}, {28, 7, 16},
    {43, 5, 8},  {43, 6, 14}, {43, 7, 16},
    {113, 5, 8}, {113, 6, 13}, {113, 7, 15},
}};

// |{x in X_d : x is not a sum of 7 fifth powers}|.
const std::array<MissingCount, 4> k_missing = {{
    {43, 6470475034ull},
    {44, 6524570166ull},
    {45, 6576538986ull},
    {113, 8482079778ull},
}};

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace

std::span<const Row> recursion_rows() { return k_rows; }

std::span<const Row> recursion_rows_for(unsigned k) {
    const auto begin = std::find_if(k_rows.begin(), k_rows.end(),
                                    [k](const Row& r) { return r.k == k; });
    auto end = begin;
    while (end != k_rows.end() && end->k == k)
        ++end;
    return {begin, end};
}

std::optional<Row> recursion_row(unsigned k, unsigned s) {
    for (const Row& r : recursion_rows_for(k)) {
        if (r.s == s)
            return r;
    }
    return std::nullopt;
}

std::span<const FinalDelta> final_deltas() { return k_final; }
std::span<const GBound> g_bounds() { return k_gbounds; }
std::span<const BoundOffset> bound_offsets() { return k_offsets; }
std::span<const IntervalG> interval_g() { return k_interval; }

std::optional<unsigned> interval_g_cell(std::uint32_t d, unsigned k) {
    for (const IntervalG& c : k_interval) {
        if (c.d == d && c.k == k)
            return c.g;
    }
    return std::nullopt;
}

std::span<const MissingCount> missing_counts() { return k_missing; }

std::vector<std::string> table_names() {
    return {"recursion_steps", "final_deltas", "g_bounds",
            "bound_offsets",   "interval_g",   "missing_counts"};
}

std::string table_csv(std::string_view name) {
    std::string out;
    if (name == "recursion_steps")
        return rows_to_csv(recursion_rows());
    if (name == "final_deltas") {
        out = "k,s,delta\n";
        for (const auto& f : k_final)
            out += std::to_string(f.k) + "," + std::to_string(f.s) + "," +
                   fmt6(f.delta) + "\n";
        return out;
    }
    if (name == "g_bounds") {
        out = "k,bound\n";
        for (const auto& g : k_gbounds)
            out += std::to_string(g.k) + "," + std::to_string(g.bound) + "\n";
        return out;
    }
    if (name == "bound_offsets") {
        out = "k,v\n";
        for (const auto& o : k_offsets)
            out += std::to_string(o.k) + "," + std::to_string(o.v) + "\n";
        return out;
    }
    if (name == "interval_g") {
        out = "d,k,g\n";
        for (const auto& c : k_interval)
            out += std::to_string(c.d) + "," + std::to_string(c.k) + "," +
                   std::to_string(c.g) + "\n";
        return out;
    }
    if (name == "missing_counts") {
        out = "d,missing\n";
        for (const auto& m : k_missing)
            out += std::to_string(m.d) + "," + std::to_string(m.missing) +
                   "\n";
        return out;
    }
    throw ArgumentError("unknown fixture table '" + std::string(name) +
                        "'; known tables: recursion_steps, final_deltas, "
                        "g_bounds, bound_offsets, interval_g, missing_counts");
}

IntegrityReport integrity_check() {
    IntegrityReport rep;
    for (const auto& f : k_final) {
        const auto rows = recursion_rows_for(f.k);
        if (rows.empty())
            continue;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            if (!(rows[i].delta < rows[i - 1].delta))
                rep.non_monotone.emplace_back(f.k, rows[i].s);
        }
        const Row& last = rows[rows.size() - 1];
        if (last.delta <= 1e-6)
            rep.complete.push_back(f.k);
        else
            rep.truncated.push_back(f.k);
        if (last.s == f.s && last.delta != f.delta)
            rep.endpoint_mismatch.push_back(f.k);
    }
    return rep;
}

std::string rows_to_csv(std::span<const Row> rows) {
    std::string out = "k,s,alpha,tau,mu,sigma,theta,delta\n";
    for (const Row& r : rows) {
        out += std::to_string(r.k) + "," + std::to_string(r.s) + "," +
               fmt6(r.params.alpha) + "," + fmt6(r.params.tau) + "," +
               fmt6(r.params.mu) + "," + fmt6(r.params.sigma) + "," +
               fmt6(r.theta) + "," + fmt6(r.delta) + "\n";
    }
    return out;
}

std::vector<Row> rows_from_csv(std::string_view csv) {
    std::vector<Row> rows;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool saw_header = false;
    while (pos <= csv.size()) {
        const std::size_t nl = csv.find('\n', pos);
        std::string_view line = csv.substr(
            pos, nl == std::string_view::npos ? csv.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? csv.size() + 1 : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty())
            continue;
        if (!saw_header) {
            if (line != "k,s,alpha,tau,mu,sigma,theta,delta")
                throw FormatError("fixture csv: unexpected header '" +
                                  std::string(line) + "'");
            saw_header = true;
            continue;
        }
        const auto fields = split_csv_line(line);
        if (fields.size() != 8)
            throw FormatError("fixture csv line " + std::to_string(line_no) +
                              ": expected 8 fields, got " +
                              std::to_string(fields.size()));
        const std::string where = "fixture csv line " + std::to_string(line_no);
        Row r;
        r.k = static_cast<unsigned>(parse_uint_field(fields[0], where));
        r.s = static_cast<unsigned>(parse_uint_field(fields[1], where));
        r.params.alpha = parse_double_field(fields[2], where);
        r.params.tau = parse_double_field(fields[3], where);
        r.params.mu = parse_double_field(fields[4], where);
        r.params.sigma = parse_double_field(fields[5], where);
        r.theta = parse_double_field(fields[6], where);
        r.delta = parse_double_field(fields[7], where);
        rows.push_back(r);
    }
    if (!saw_header)
        throw FormatError("fixture csv: missing header");
    return rows;
}

} // namespace waring::fixtures
