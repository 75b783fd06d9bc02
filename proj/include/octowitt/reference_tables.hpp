#pragma once

// Reference tables for n = 1 as they appear in the literature, transcribed
// term by term. Misprints are kept on purpose: fidelity checks compare the
// computed tables against exactly these entries and report any difference.

#include <array>

namespace octowitt::reference {

/// witt_signs[j][i]: sign of e_i g_i in f_j.
inline constexpr std::array<std::array<int, 8>, 8> kWittSigns{{
    {+1, -1, -1, -1, -1, -1, -1, -1},
    {+1, +1, -1, +1, -1, +1, -1, +1},
    {+1, -1, +1, +1, -1, -1, +1, +1},
    {+1, +1, +1, -1, -1, +1, +1, -1},
    {+1, -1, -1, -1, +1, +1, +1, +1},
    {+1, +1, -1, +1, +1, -1, +1, -1},
    {+1, -1, +1, +1, +1, +1, -1, -1},
    {+1, +1, +1, -1, +1, -1, -1, +1},
}};

/// One term +-x_var g_l of a twistor vector; entries are listed by l.
struct TwistorEntry {
  int sign;
  int var;
};

/// twistor[i][l]: the x-term multiplying g_l in X_i.
inline constexpr std::array<std::array<TwistorEntry, 8>, 8> kTwistor{{
    // X0 = x0g0 + x1g1 + x2g2 + x3g3 + x4g4 + x5g5 + x6g6 + x7g7
    {{{+1, 0}, {+1, 1}, {+1, 2}, {+1, 3}, {+1, 4}, {+1, 5}, {+1, 6}, {+1, 7}}},
    // X1 = x1g0 - x0g1 - x3g2 + x2g3 - x5g4 + x4g5 + x7g6 - x6g7
    {{{+1, 1}, {-1, 0}, {-1, 3}, {+1, 2}, {-1, 5}, {+1, 4}, {+1, 7}, {-1, 6}}},
    // X2 = x2g0 + x3g1 - x0g2 - x1g3 - x6g4 - x7g5 + x4g6 + x5g7
    {{{+1, 2}, {+1, 3}, {-1, 0}, {-1, 1}, {-1, 6}, {-1, 7}, {+1, 4}, {+1, 5}}},
    // X3 = x3g0 - x2g1 + x1g2 - x0g3 - x7g4 + x6g5 - x5g6 + x4g7
    {{{+1, 3}, {-1, 2}, {+1, 1}, {-1, 0}, {-1, 7}, {+1, 6}, {-1, 5}, {+1, 4}}},
    // X4 = x4g0 + x5g1 + x6g2 + x7g3 - x0g4 - x1g5 - x2g6 - x3g7
    {{{+1, 4}, {+1, 5}, {+1, 6}, {+1, 7}, {-1, 0}, {-1, 1}, {-1, 2}, {-1, 3}}},
    // X5 = x5g0 - x4g1 + x7g2 - x6g3 + x1g4 - x0g5 + x3g6 - x2g7
    {{{+1, 5}, {-1, 4}, {+1, 7}, {-1, 6}, {+1, 1}, {-1, 0}, {+1, 3}, {-1, 2}}},
    // X6 = x6g0 - x7g1 - x4g2 + x5g3 - x2g4 - x3g5 - x0g6 + x1g7
    {{{+1, 6}, {-1, 7}, {-1, 4}, {+1, 5}, {-1, 2}, {-1, 3}, {-1, 0}, {+1, 1}}},
    // X7 = x7g0 + x6g1 - x5g2 - x4g3 + x3g4 + x2g5 - x1g6 - x0g7
    {{{+1, 7}, {+1, 6}, {-1, 5}, {-1, 4}, {+1, 3}, {+1, 2}, {-1, 1}, {-1, 0}}},
}};

/// hermitian_signs[i][j]: sign of e_j X_j in Z_i.
inline constexpr std::array<std::array<int, 8>, 8> kHermitianSigns{{
    {+1, +1, +1, +1, +1, +1, +1, +1},
    {+1, -1, +1, -1, +1, -1, +1, -1},
    {+1, +1, -1, -1, +1, +1, -1, -1},
    {+1, -1, -1, +1, +1, -1, -1, +1},
    {+1, +1, +1, +1, -1, -1, -1, -1},
    {+1, -1, +1, -1, -1, +1, -1, +1},
    {+1, +1, -1, -1, -1, -1, +1, +1},
    {+1, -1, -1, +1, -1, +1, +1, -1},
}};

}  // namespace octowitt::reference
