#pragma once

#include <array>
#include <utility>

// Values printed in the supply-chain worked example, 4 decimals.
namespace ifsir::testing::worked {

using Pair = std::pair<double, double>;

inline constexpr std::array<double, 3> kXi = {1.0000, 0.8314, 0.7405};

inline constexpr std::array<std::array<Pair, 4>, 5> kGroupMatrix = {{
    {{{0.9677, 0.0090}, {0.9254, 0.0323}, {0.9777, 0.0048}, {0.9548, 0.0159}}},
    {{{0.9120, 0.0399}, {0.9043, 0.0446}, {0.9289, 0.0301}, {0.8859, 0.0574}}},
    {{{0.9920, 0.0027}, {0.9777, 0.0048}, {0.9785, 0.0045}, {0.9785, 0.0045}}},
    {{{0.9397, 0.0239}, {0.8574, 0.0766}, {0.9699, 0.0080}, {0.9289, 0.0301}}},
    {{{0.8816, 0.0603}, {0.7982, 0.1184}, {0.9441, 0.0215}, {0.8603, 0.0746}}},
}};

inline constexpr std::array<Pair, 4> kGroupWeights = {
    {{0.9892, 0.0022}, {0.9309, 0.0284}, {0.9560, 0.0133}, {0.8900, 0.0532}}};

inline constexpr std::array<std::array<double, 4>, 5> kPerformance = {{
    {{0.9684, 0.9284, 0.9781, 0.9561}},
    {{0.9160, 0.9090, 0.9317, 0.8920}},
    {{0.9920, 0.9781, 0.9789, 0.9789}},
    {{0.9418, 0.8662, 0.9706, 0.9317}},
    {{0.8881, 0.8137, 0.9460, 0.8688}},
}};

struct FlowRow {
  Pair s_flow;
  double s_score;
  Pair i_flow;
  double i_score;
};

inline constexpr std::array<FlowRow, 5> kFlows = {{
    {{0.3134, 0.6017}, -0.2883, {0.1178, 0.8442}, -0.7264},
    {{0.1138, 0.8506}, -0.7368, {0.3164, 0.5971}, -0.2807},
    {{0.3942, 0.5079}, -0.1137, {0.0000, 1.0000}, -1.0},
    {{0.1636, 0.7852}, -0.6216, {0.2758, 0.6469}, -0.3711},
    {{0.0308, 0.9577}, -0.9269, {0.3750, 0.5304}, -0.1554},
}};

// Both rankings and the final map: Y_3, Y_1, Y_4, Y_2, Y_5 (0-based).
inline constexpr std::array<std::size_t, 5> kRanking = {2, 0, 3, 1, 4};

}  // namespace ifsir::testing::worked
