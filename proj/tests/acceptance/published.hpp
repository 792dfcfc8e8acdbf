#pragma once

// Reference values for the report tables on the release-6 macrohistory panel, 16 countries.

#include <array>
#include <limits>
#include <utility>
#include <string_view>

namespace published {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline constexpr std::array<std::string_view, 16> kCountries{
    "Australia", "Belgium", "Denmark", "Finland", "France", "Germany", "Italy", "Japan",
    "Netherlands", "Norway", "Portugal", "Spain", "Sweden", "Switzerland", "UK", "USA"};

struct SingleRow {
    std::string_view country;
    int start, end;
    double coeff, t, r2;
};

struct PortfolioRow {
    std::string_view country;
    int start, end;
    std::array<double, 3> coeff, t;
    double r2;
};

inline constexpr std::array<SingleRow, 16> kRegBond{{
    {"Australia", 1901, 2020, 0.024, 1.626, 0.022},
    {"Belgium", 1871, 2020, 0.003, 0.183, 0.0},
    {"Denmark", 1871, 2020, 0.007, 0.474, 0.003},
    {"Finland", 1871, 2020, 0.016, 1.369, 0.016},
    {"France", 1871, 2020, -0.006, -0.687, 0.002},
    {"Germany", 1871, 2020, -0.001, -0.207, 0.0},
    {"Italy", 1871, 2020, -0.005, -0.255, 0.001},
    {"Japan", 1882, 2020, -0.017, -4.645, 0.079},
    {"Netherlands", 1871, 2020, -0.002, -0.211, 0.0},
    {"Norway", 1871, 2020, 0.003, 0.197, 0.0},
    {"Portugal", 1872, 2020, 0.026, 1.652, 0.019},
    {"Spain", 1901, 2020, -0.015, -1.009, 0.013},
    {"Sweden", 1872, 2020, 0.008, 0.625, 0.004},
    {"Switzerland", 1901, 2020, -0.004, -0.728, 0.003},
    {"UK", 1871, 2020, 0.016, 1.183, 0.009},
    {"USA", 1872, 2020, 0.009, 0.488, 0.003},
}};

inline constexpr std::array<SingleRow, 16> kRegEquity{{
    {"Australia", 1871, 2020, 0.124, 1.673, 0.031},
    {"Belgium", 1871, 2020, 0.049, 2.021, 0.013},
    {"Denmark", 1874, 2020, -0.004, -0.138, 0.0},
    {"Finland", 1913, 2020, 0.029, 0.717, 0.003},
    {"France", 1871, 2020, 0.095, 3.179, 0.051},
    {"Germany", 1871, 2020, -0.003, -0.051, 0.0},
    {"Italy", 1871, 2020, 0.019, 0.377, 0.001},
    {"Japan", 1887, 2020, 0.018, 0.743, 0.005},
    {"Netherlands", 1901, 2020, 0.066, 1.108, 0.018},
    {"Norway", 1882, 2020, 0.041, 0.738, 0.007},
    {"Portugal", 1872, 2020, 0.029, 7.066, 0.147},
    {"Spain", 1901, 2020, 0.001, 0.659, 0.0},
    {"Sweden", 1872, 2020, 0.019, 0.37, 0.001},
    {"Switzerland", 1901, 2020, -0.018, -0.399, 0.002},
    {"UK", 1872, 2020, 0.216, 3.878, 0.129},
    {"USA", 1873, 2020, 0.025, 0.804, 0.004},
}};

inline constexpr std::array<SingleRow, 16> kRegHousing{{
    {"Australia", 1902, 2020, 0.034, 1.373, 0.01},
    {"Belgium", 1891, 2020, -0.033, -1.27, 0.013},
    {"Denmark", 1877, 2020, 0.039, 2.008, 0.048},
    {"Finland", 1921, 2020, 0.097, 2.119, 0.12},
    {"France", 1872, 2020, 0.089, 2.132, 0.059},
    {"Germany", 1872, 2020, 0.054, 1.965, 0.047},
    {"Italy", 1929, 2020, 0.033, 0.88, 0.038},
    {"Japan", 1932, 2020, 0.1, 2.421, 0.132},
    {"Netherlands", 1872, 2020, 0.097, 3.481, 0.115},
    {"Norway", 1872, 2020, 0.053, 1.39, 0.021},
    {"Portugal", 1949, 2020, 0.086, 2.533, 0.103},
    {"Spain", 1902, 2020, 0.048, 1.601, 0.028},
    {"Sweden", 1884, 2020, 0.03, 1.008, 0.014},
    {"Switzerland", 1903, 2020, 0.022, 0.695, 0.005},
    {"UK", 1897, 2020, 0.071, 2.501, 0.037},
    {"USA", 1892, 2020, 0.078, 1.46, 0.021},
}};

inline constexpr std::array<PortfolioRow, 16> kRegRisky{{
    {"Australia", 1902, 2020, {-0.061, 0.044, -0.042}, {-1.435, 1.299, -1.595}, 0.061},
    {"Belgium", 1891, 2020, {0.004, -0.002, -0.015}, {0.178, -0.044, -0.955}, 0.005},
    {"Denmark", 1880, 2020, {-0.006, 0.024, -0.026}, {-0.288, 1.01, -2.51}, 0.064},
    {"Finland", 1921, 2019, {0.018, 0.118, -0.011}, {0.483, 2.613, -0.551}, 0.11},
    {"France", 1872, 2020, {-0.074, 0.093, -0.006}, {-5.578, 2.389, -0.465}, 0.238},
    {"Germany", 1872, 2020, {-0.023, 0.061, -0.028}, {-1.106, 2.897, -3.254}, 0.091},
    {"Italy", 1929, 2020, {-0.108, 0.032, -0.033}, {-2.875, 1.726, -1.484}, 0.267},
    {"Japan", 1932, 2020, {0.012, 0.084, 0.01}, {0.466, 1.181, 0.997}, 0.152},
    {"Netherlands", 1901, 2020, {-0.031, 0.119, -0.025}, {-1.19, 3.067, -1.385}, 0.174},
    {"Norway", 1882, 2019, {-0.016, 0.061, -0.034}, {-0.638, 1.933, -1.466}, 0.05},
    {"Portugal", 1949, 2019, {0.001, 0.134, -0.02}, {0.605, 4.065, -0.81}, 0.181},
    {"Spain", 1902, 2017, {-0.02, 0.032, -0.042}, {-0.884, 1.214, -1.879}, 0.061},
    {"Sweden", 1884, 2019, {-0.026, 0.06, -0.029}, {-0.974, 1.729, -1.685}, 0.038},
    {"Switzerland", 1903, 2015, {-0.004, 0.048, -0.035}, {-0.369, 1.074, -3.584}, 0.079},
    {"UK", 1897, 2019, {0.075, 0.06, -0.007}, {2.386, 1.807, -0.407}, 0.079},
    {"USA", 1892, 2020, {-0.004, 0.074, -0.045}, {-0.206, 1.406, -2.912}, 0.061},
}};

inline constexpr std::array<PortfolioRow, 16> kRegWealth{{
    {"Australia", 1902, 2020, {-0.051, 0.028, -0.024}, {-1.497, 1.069, -1.183}, 0.042},
    {"Belgium", 1891, 2020, {0.003, 0.004, -0.012}, {0.163, 0.128, -0.811}, 0.005},
    {"Denmark", 1880, 2020, {-0.007, 0.014, -0.02}, {-0.468, 0.753, -2.399}, 0.047},
    {"Finland", 1921, 2019, {0.017, 0.108, -0.006}, {0.516, 2.688, -0.319}, 0.116},
    {"France", 1872, 2020, {-0.053, 0.075, -0.004}, {-4.814, 2.313, -0.409}, 0.216},
    {"Germany", 1872, 2020, {-0.017, 0.05, -0.021}, {-1.014, 2.83, -3.084}, 0.087},
    {"Italy", 1929, 2020, {-0.083, 0.014, -0.028}, {-2.712, 1.122, -1.644}, 0.244},
    {"Japan", 1932, 2020, {0.014, 0.051, 0.008}, {0.663, 0.785, 1.202}, 0.144},
    {"Netherlands", 1901, 2020, {-0.027, 0.069, -0.017}, {-1.229, 2.325, -1.138}, 0.12},
    {"Norway", 1882, 2019, {-0.014, 0.045, -0.031}, {-0.713, 1.763, -1.779}, 0.054},
    {"Portugal", 1949, 2019, {0.002, 0.113, -0.002}, {1.502, 7.887, -0.26}, 0.168},
    {"Spain", 1902, 2017, {-0.014, 0.02, -0.035}, {-0.773, 0.83, -1.895}, 0.059},
    {"Sweden", 1884, 2019, {-0.015, 0.036, -0.021}, {-0.692, 1.216, -1.523}, 0.024},
    {"Switzerland", 1903, 2015, {-0.001, 0.055, -0.033}, {-0.127, 1.475, -3.935}, 0.09},
    {"UK", 1897, 2019, {0.048, 0.018, 0.006}, {1.771, 0.645, 0.456}, 0.056},
    {"USA", 1892, 2020, {-0.008, 0.085, -0.028}, {-0.547, 1.944, -2.467}, 0.052},
}};

inline constexpr std::array<SingleRow, 16> kGrowthEquity{{
    {"Australia", 1871, 2020, -0.088, -1.317, 0.017},
    {"Belgium", 1871, 2020, -0.125, -2.097, 0.045},
    {"Denmark", 1874, 2020, -0.119, -2.847, 0.06},
    {"Finland", 1914, 2020, -0.256, -4.04, 0.13},
    {"France", 1871, 2020, -0.033, -0.582, 0.008},
    {"Germany", 1871, 2020, -0.871, -40.747, 0.904},
    {"Italy", 1871, 2020, -0.175, -3.41, 0.091},
    {"Japan", 1887, 2020, -0.028, -1.779, 0.024},
    {"Netherlands", 1901, 2020, -0.366, -3.74, 0.192},
    {"Norway", 1882, 2020, -0.275, -2.044, 0.117},
    {"Portugal", 1872, 2020, -0.695, -4.702, 0.635},
    {"Spain", 1901, 2020, -0.864, -28.774, 0.865},
    {"Sweden", 1872, 2020, -0.296, -5.682, 0.201},
    {"Switzerland", 1901, 2020, -0.194, -4.621, 0.128},
    {"UK", 1872, 2020, -0.164, -1.705, 0.067},
    {"USA", 1873, 2020, -0.097, -3.133, 0.127},
}};

inline constexpr std::array<SingleRow, 16> kGrowthHousing{{
    {"Australia", 1902, 2020, 0.028, 1.107, 0.007},
    {"Belgium", 1891, 2020, -0.097, -1.827, 0.191},
    {"Denmark", 1877, 2020, -0.028, -1.613, 0.089},
    {"Finland", 1921, 2020, -0.01, -0.174, 0.001},
    {"France", 1872, 2020, 0.05, 1.272, 0.02},
    {"Germany", 1872, 2020, -0.064, -1.831, 0.083},
    {"Italy", 1929, 2020, -0.033, -0.795, 0.044},
    {"Japan", 1932, 2020, -0.02, -0.489, 0.007},
    {"Netherlands", 1872, 2020, 0.004, 0.273, 0.002},
    {"Norway", 1872, 2020, -0.011, -0.463, 0.002},
    {"Portugal", 1949, 2020, 0.08, 2.63, 0.112},
    {"Spain", 1902, 2020, -0.008, -0.388, 0.002},
    {"Sweden", 1884, 2020, 0.001, 0.051, 0.0},
    {"Switzerland", 1903, 2020, -0.07, -3.047, 0.165},
    {"UK", 1897, 2020, -0.02, -0.673, 0.007},
    {"USA", 1892, 2020, -0.129, -4.208, 0.233},
}};

/// Per asset (bond, equity, housing, risky, wealth): out-of-sample R2 and Clark-West p.
struct OosRow {
    std::string_view country;
    std::array<double, 5> r2, p;
};

inline constexpr std::array<OosRow, 16> kOos{{
    {"Australia", {-0.011, 0.014, -0.026, -0.019, -0.043}, {0.513, 0.18, 0.459, 0.311, 0.719}},
    {"Belgium", {-0.03, -0.01, -0.1, -0.318, -0.249}, {0.547, 0.317, 0.628, 0.655, 0.548}},
    {"Denmark", {-0.06, -0.042, -0.002, -0.125, -0.167}, {0.545, 0.514, 0.22, 0.807, 0.594}},
    {"Finland", {-0.088, -0.052, -0.169, -0.118, -0.111}, {0.764, 0.149, 0.436, 0.083, 0.074}},
    {"France", {-0.022, 0.003, 0.042, 0.102, 0.108}, {0.508, 0.28, 0.03, 0.033, 0.021}},
    {"Germany", {-0.148, -20.631, 0.014, -0.287, -0.322}, {0.592, 0.408, 0.049, 0.025, 0.034}},
    {"Italy", {-0.09, -0.238, 0.045, -0.292, -0.296}, {0.535, 0.258, 0.172, 0.153, 0.241}},
    {"Japan", {0.009, -0.099, -0.04, -0.429, -0.684}, {0.159, 0.989, 0.576, 0.438, 0.432}},
    {"Netherlands", {-0.036, -0.021, 0.034, -0.01, -0.079}, {0.323, 0.904, 0.11, 0.146, 0.434}},
    {"Norway", {-0.038, -0.023, -0.089, -0.225, -0.258}, {0.737, 0.553, 0.205, 0.995, 0.912}},
    {"Portugal", {-0.049, 0.03, 0.052, -4.703, -4.891}, {0.828, 0.313, 0.144, 0.601, 0.67}},
    {"Spain", {-0.065, -0.547, -0.017, -0.115, -0.093}, {0.371, 0.99, 0.454, 0.15, 0.129}},
    {"Sweden", {-0.087, -0.019, -0.017, -0.078, -0.102}, {0.849, 0.097, 0.326, 0.112, 0.167}},
    {"Switzerland", {-0.144, -0.12, -0.051, -0.074, -0.066}, {0.233, 0.228, 0.339, 0.133, 0.145}},
    {"UK", {-0.05, 0.099, -0.065, -0.151, -0.186}, {0.204, 0.02, 0.019, 0.543, 0.672}},
    {"USA", {-0.029, -0.022, -0.224, -0.195, -0.267}, {0.869, 0.711, 0.928, 0.907, 0.605}},
}};

struct EconRow {
    std::string_view country;
    double null_sr, alt_sr, cer_gain, cer_z, turnover;
};

inline constexpr std::array<EconRow, 16> kEconBond{{
    {"Australia", -0.01, 0.05, -0.47, -1.47, 2.03},
    {"Belgium", -0.01, 0.0, -0.69, -2.74, 2.78},
    {"Denmark", -0.02, -0.06, -0.69, -4.13, 5.91},
    {"Finland", 0.12, 0.2, -0.9, -1.01, 6.71},
    {"France", 0.0, -0.02, -0.25, -9.64, 2.16},
    {"Germany", 0.27, 0.22, -0.4, -9.28, 1.83},
    {"Italy", -0.09, -0.03, -0.5, -1.06, 5.28},
    {"Japan", 0.0, 0.19, 0.66, 7.32, kInf},
    {"Netherlands", -0.05, -0.14, -0.58, -12.35, 2.75},
    {"Norway", -0.05, -0.13, -0.44, -5.95, 2.68},
    {"Portugal", 0.06, 0.03, -0.94, -2.29, 1.7},
    {"Spain", -0.04, 0.0, 0.14, 2.6, 2.17},
    {"Sweden", 0.01, 0.08, -0.3, -1.3, 4.82},
    {"Switzerland", 0.41, 0.32, -0.46, -6.99, 2.69},
    {"UK", 0.02, -0.02, -0.22, -10.51, 3.53},
    {"USA", 0.01, 0.02, 0.01, 0.29, 54.04},
}};

inline constexpr std::array<EconRow, 16> kEconEquity{{
    {"Australia", 0.4, 0.42, 0.27, 6.27, 1.53},
    {"Belgium", 0.15, 0.17, -0.1, -0.67, 4.53},
    {"Denmark", 0.21, 0.16, -0.78, -4.14, 1.95},
    {"Finland", 0.3, 0.26, -0.71, -3.94, 3.23},
    {"France", 0.15, 0.18, 0.02, 0.08, 4.77},
    {"Germany", 0.09, 0.09, -6.05e+18, 0.0, 1.34},
    {"Italy", 0.06, 0.01, -1.64, -3.11, 4.2},
    {"Japan", 0.13, 0.05, -0.47, -3.99, 3.3},
    {"Netherlands", 0.33, 0.38, 1.52, 1.9, 3.69},
    {"Norway", 0.01, 0.01, -0.48, -3.14, 4.57},
    {"Portugal", 0.2, 0.14, -1.11, -3.81, 2.32},
    {"Spain", 0.16, 0.22, 0.34, 2.99, 2.3},
    {"Sweden", 0.18, 0.15, -0.19, -28.27, 1.57},
    {"Switzerland", 0.23, 0.13, -1.36, -2.42, 3.31},
    {"UK", 0.26, 0.31, -0.29, -0.44, 3.31},
    {"USA", 0.25, 0.18, -0.31, -1.59, 2.39},
}};

inline constexpr std::array<EconRow, 16> kEconHousing{{
    {"Australia", 0.38, 0.32, -2.74, -4.74, 2.85},
    {"Belgium", 0.81, 0.79, -0.48, -1.64, 4.09},
    {"Denmark", 0.73, 0.7, -0.47, -1.54, 1.67},
    {"Finland", 0.73, 0.77, 0.61, 1.82, 1.34},
    {"France", 0.89, 0.85, -0.51, -5.92, 3.9},
    {"Germany", 0.43, 0.48, 0.39, 0.9, 2.4},
    {"Italy", 0.29, 0.33, 0.53, 14.74, 0.86},
    {"Japan", 0.46, 0.47, 0.13, 11.6, kInf},
    {"Netherlands", 0.77, 0.82, 0.21, 0.38, 2.4},
    {"Norway", 0.72, 0.64, -1.03, -1.67, 3.24},
    {"Portugal", 0.78, 0.77, -0.22, -4.57, 4.26},
    {"Spain", 0.4, 0.36, -0.2, -0.65, 2.28},
    {"Sweden", 0.82, 0.73, -0.87, -2.83, 1.97},
    {"Switzerland", 1.15, 1.14, 0.01, 3.54, 0.0},
    {"UK", 0.55, 0.55, -0.12, -0.21, 3.31},
    {"USA", 0.76, 0.62, -0.82, -6.92, 1.97},
}};

inline constexpr std::array<EconRow, 16> kEconRisky{{
    {"Australia", 0.43, 0.37, -2.45, -4.67, 6.29},
    {"Belgium", 0.64, 0.59, -0.83, -1.43, 5.07},
    {"Denmark", 0.7, 0.66, -0.45, -3.02, 2.39},
    {"Finland", 0.5, 0.64, 1.26, 0.88, 1.32},
    {"France", 0.92, 0.75, -1.87, -3.47, 11.39},
    {"Germany", 0.44, 0.56, 0.93, 1.02, 7.61},
    {"Italy", 0.3, 0.34, 0.56, 2.2, 3.97},
    {"Japan", 0.42, 0.4, -0.15, -1.08, 4.64},
    {"Netherlands", 0.81, 0.77, -0.72, -2.14, 7.11},
    {"Norway", 0.76, 0.62, -1.42, -4.48, 5.27},
    {"Portugal", 0.65, 0.56, -1.6, -5.98, 2.89},
    {"Spain", 0.46, 0.46, 0.08, 0.13, 5.11},
    {"Sweden", 0.73, 0.7, -0.39, -1.13, 3.5},
    {"Switzerland", 0.9, 0.88, -0.06, -0.36, 6.25},
    {"UK", 0.57, 0.48, -0.95, -1.0, 3.88},
    {"USA", 0.62, 0.52, -1.07, -4.63, 7.24},
}};

inline constexpr std::array<EconRow, 16> kEconWealth{{
    {"Australia", 0.45, 0.43, -0.28, -3.45, 6.9},
    {"Belgium", 0.64, 0.54, -1.02, -2.16, 4.77},
    {"Denmark", 0.71, 0.67, -0.47, -1.76, 5.05},
    {"Finland", 0.5, 0.63, 1.27, 1.06, 1.32},
    {"France", 0.86, 0.7, -1.53, -5.86, 20.24},
    {"Germany", 0.45, 0.6, 0.69, 1.04, 8.5},
    {"Italy", 0.36, 0.38, 0.26, 1.8, 4.12},
    {"Japan", 0.47, 0.45, -0.21, -5.51, 6.22},
    {"Netherlands", 0.84, 0.76, -0.83, -9.2, 9.16},
    {"Norway", 0.76, 0.66, -1.01, -4.36, 6.65},
    {"Portugal", 0.63, 0.51, -1.85, -7.76, 2.73},
    {"Spain", 0.5, 0.45, -0.49, -1.04, 5.5},
    {"Sweden", 0.77, 0.75, -0.37, -1.36, 4.3},
    {"Switzerland", 0.92, 0.87, -0.38, -2.4, 5.28},
    {"UK", 0.53, 0.43, -0.89, -1.5, 3.09},
    {"USA", 0.61, 0.53, -0.66, -8.14, 5.73},
}};

/// Summary flags per asset as IS, OOS, CER triples; 'Y' or ' '.
inline constexpr std::array<std::pair<std::string_view, std::string_view>, 16> kSummary{{
    {"Australia", "   Y Y         "},
    {"Belgium", "   Y           "},
    {"Denmark", "      Y  Y    Y"},
    {"Finland", "      Y YY    Y"},
    {"France", "   Y  YY YY YY "},
    {"Germany", "      YY Y    Y"},
    {"Italy", "        YY Y  Y"},
    {"Japan", "Y Y   Y Y      "},
    {"Netherlands", "     YY  Y    Y"},
    {"Norway", "         Y    Y"},
    {"Portugal", "Y  Y  Y  Y Y  Y"},
    {"Spain", "  Y  Y   Y    Y"},
    {"Sweden", "         Y     "},
    {"Switzerland", "        YY    Y"},
    {"UK", "   YY Y  Y    Y"},
    {"USA", "         Y    Y"},
}};

}  // namespace published
