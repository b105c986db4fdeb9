#include "ndoppe/fixtures.hpp"

#include <limits>

namespace ndoppe {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<TableFixture> build() {
    std::vector<TableFixture> t;

    t.push_back({"table1",
                 {{0, 103704}, {1, 14075}, {2, 1766}, {3, 255}, {4, 45}, {5, 6}, {6, 2}},
                 {1.0, 1.0},
                 {{102627.9, 15923.36, 1235.304, 63.8884, 2.478171, 0.07690074, 0.001988605},
                  55108.46, 4218.796},
                 {{103217.2, 14861.67, 1604.886, 154.0523, 13.86321, 1.197651, 0.1005918},
                  54697.39, 251.3145},
                 {{103519.4, 14339.05, 1765.495, 203.7906, 22.58254, 2.432916, 0.2567596},
                  54630.26, 57.37906}});

    t.push_back({"table2",
                 {{0, 370412}, {1, 46545}, {2, 3935}, {3, 317}, {4, 28}, {5, 3}},
                 {1.0, 1.0, 1.0, 1.0},
                 {{369253.7, 48637.64, 3203.244, 140.6425, 4.631312, 0.1220061},
                  171373.2, 667.7778},
                 {{370786.0, 45826.83, 4247.933, 350.0120, 27.03706, 2.004967},
                  171152.4, 38.32639},
                 {{370651.6, 46250.37, 4027.637, 290.5628, 18.63986, 1.103071},
                  171139.3, 14.53022}});

    t.push_back({"table3",
                 {{0, 7840}, {1, 1317}, {2, 239}, {3, 42}, {4, 14}, {5, 4}, {6, 4}, {7, 1}},
                 {1.0, 1.0},
                 {{7635.46, 1636.852, 175.4500, 12.53737, 0.6719245, 0.02880876, 0.001029313,
                   3.152271e-05},
                  5490.781, 48229.53},
                 {{7718.056, 1494.167, 216.9461, 27.99961, 3.387843, 0.3935191, 0.04443999,
                   0.004916174},
                  5388.843, 651.966},
                 {{7757.174, 1428.108, 233.7039, 35.85438, 5.280678, 0.7561408, 0.1060622,
                   0.01464467},
                  5367.193, 248.2751}});

    t.push_back({"table4",
                 {{0, 3719}, {1, 232}, {2, 38}, {3, 7}, {4, 3}, {5, 1}},
                 {1.0, 1.0},
                 {{3668.600, 317.2765, 13.71973, 0.3955141, 0.008551448, 0.0001479133},
                  1246.077, 7982.045},
                 {{3675.159, 304.7798, 18.95647, 1.048036, 0.05432081, 0.002702885},
                  1221.197, 598.55},
                 {{3678.629, 298.3138, 21.50345, 1.453163, 0.09427396, 0.005946133},
                  1213.141, 304.7557}});

    t.push_back({"table5",
                 {{0, 96978}, {1, 9240}, {2, 704}, {3, 43}, {4, 9}},
                 {1.0, 3.35},
                 {{96688.27, 9774.58, 494.0744, 16.64928, 0.4207845}, 36188.25, 335.9228},
                 {{96929.48, 9325.676, 672.924, 43.16177, 2.595396}, 36106.19, 18.05162},
                 {{96981.69, 9227.194, 711.7372, 49.85381, 3.303031}, 36104.22, 10.87023}});

    t.push_back({"table6",
                 {{0, 20592}, {1, 2651}, {2, 297}, {3, 41}, {4, 7}, {5, 0}, {6, 1}},
                 {1.0, 1.0},
                 {{20417.77, 2947.815, 212.7954, 10.24078, 0.3696281, 0.01067301, 0.0002568194},
                  10297.85, 4167.816},
                 {{20522.27, 2760.887, 278.5692, 24.98418, 2.100720, 0.1695675, 0.01330708},
                  10233.72, 100.8537},
                 {{20572.3, 2671.185, 308.2993, 33.35894, 3.46516, 0.3499451, 0.03461957},
                  10224.71, 33.21162}});

    t.push_back({"table7",
                 {{0, 71087},
                  {1, 6744},
                  {2, 2067},
                  {3, 690},
                  {4, 248},
                  {5, 95},
                  {6, 34},
                  {7, 17},
                  {8, 4},
                  {9, 3},
                  {10, 3},
                  {11, 2}},
                 {1.0, 0.01, 0.01},
                 {{67424.99, 12363.00, 1133.436, 69.27539, 3.175573, 0.1164542, 0.003558829,
                   9.322066e-05, 2.136610e-06, 4.352973e-08, 7.981583e-10, 1.330453e-11},
                  44481.26, 312143246723.0},
                 {{67960.82, 11415.29, 1438.059, 161.0327, 16.90529, 1.703736, 0.1669351,
                   0.01602279, 0.001513872, 0.0001412684, 1.305077e-05, 1.195703e-06},
                  42392.02, 4146376.0},
                 {{68472.88, 10556.37, 1652.717, 262.0185, 41.94244, 6.760695, 1.09478,
                   0.1777548, 0.02889426, 0.004696679, 0.0007627534, 0.0001236865},
                  41257.56, 53609.78}});

    // table8's published NDOPPE column repeats the x=3 value at x=4 (a
    // typesetting duplicate); that entry is stored as NaN and skipped by
    // the report's error summary.
    t.push_back({"table8",
                 {{0, 530642}, {1, 33495}, {2, 2585}, {3, 211}, {4, 25}},
                 {1.0, 1.0},
                 {{528917.3, 36734.96, 1275.679, 29.53329, 0.5127949}, 146704.8, 3919.575},
                 {{529526.7, 35556.89, 1790.692, 80.16146, 3.364198}, 146051.2, 826.9477},
                 {{529832.4, 34956.52, 2050.054, 112.713, kNaN}, 145879.5, 348.6467}});

    return t;
}

}  // namespace

const std::vector<TableFixture>& fixtures() {
    static const std::vector<TableFixture> t = build();
    return t;
}

const TableFixture* find_fixture(const std::string& name) {
    for (const auto& f : fixtures())
        if (f.name == name) return &f;
    return nullptr;
}

}  // namespace ndoppe
