#pragma once

// Reference tables for G2(3) and G2(4), written out by hand. Gyration rows
// are strings of 'I'/'A', one character per column.

#include <string>
#include <vector>

#include "gyro/permutation.hpp"

namespace reference {

inline const std::vector<std::vector<gyro::Element>> kCayley3 = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 2, 3, 0, 5, 6, 7, 4},
    {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 0, 1, 2, 7, 4, 5, 6},
    {4, 7, 6, 5, 0, 3, 2, 1},
    {5, 6, 7, 4, 1, 2, 3, 0},
    {6, 5, 4, 7, 2, 1, 0, 3},
    {7, 4, 5, 6, 3, 0, 1, 2},
};

inline const std::vector<std::string> kGyration3 = {
    "IIIIIIII",
    "IIIIAAAA",
    "IIIIIIII",
    "IIIIAAAA",
    "IAIAIAIA",
    "IAIAAIAI",
    "IAIAIAIA",
    "IAIAAIAI",
};

inline const std::vector<std::vector<gyro::Element>> kCayley4 = {
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15},
    {1, 2, 3, 4, 5, 6, 7, 0, 9, 10, 11, 12, 13, 14, 15, 8},
    {2, 3, 4, 5, 6, 7, 0, 1, 10, 11, 12, 13, 14, 15, 8, 9},
    {3, 4, 5, 6, 7, 0, 1, 2, 11, 12, 13, 14, 15, 8, 9, 10},
    {4, 5, 6, 7, 0, 1, 2, 3, 12, 13, 14, 15, 8, 9, 10, 11},
    {5, 6, 7, 0, 1, 2, 3, 4, 13, 14, 15, 8, 9, 10, 11, 12},
    {6, 7, 0, 1, 2, 3, 4, 5, 14, 15, 8, 9, 10, 11, 12, 13},
    {7, 0, 1, 2, 3, 4, 5, 6, 15, 8, 9, 10, 11, 12, 13, 14},
    {8, 13, 10, 15, 12, 9, 14, 11, 0, 5, 2, 7, 4, 1, 6, 3},
    {9, 10, 11, 12, 13, 14, 15, 8, 1, 2, 3, 4, 5, 6, 7, 0},
    {10, 15, 12, 9, 14, 11, 8, 13, 2, 7, 4, 1, 6, 3, 0, 5},
    {11, 12, 13, 14, 15, 8, 9, 10, 3, 4, 5, 6, 7, 0, 1, 2},
    {12, 9, 14, 11, 8, 13, 10, 15, 4, 1, 6, 3, 0, 5, 2, 7},
    {13, 14, 15, 8, 9, 10, 11, 12, 5, 6, 7, 0, 1, 2, 3, 4},
    {14, 11, 8, 13, 10, 15, 12, 9, 6, 3, 0, 5, 2, 7, 4, 1},
    {15, 8, 9, 10, 11, 12, 13, 14, 7, 0, 1, 2, 3, 4, 5, 6},
};

inline const std::vector<std::string> kGyration4 = {
    "IIIIIIIIIIIIIIII",
    "IIIIIIIIAAAAAAAA",
    "IIIIIIIIIIIIIIII",
    "IIIIIIIIAAAAAAAA",
    "IIIIIIIIIIIIIIII",
    "IIIIIIIIAAAAAAAA",
    "IIIIIIIIIIIIIIII",
    "IIIIIIIIAAAAAAAA",
    "IAIAIAIAIAIAIAIA",
    "IAIAIAIAAIAIAIAI",
    "IAIAIAIAIAIAIAIA",
    "IAIAIAIAAIAIAIAI",
    "IAIAIAIAIAIAIAIA",
    "IAIAIAIAAIAIAIAI",
    "IAIAIAIAIAIAIAIA",
    "IAIAIAIAAIAIAIAI",
};

// A = (1,3)(5,7) and A = (1,5)(3,7)(9,13)(11,15).
inline const std::vector<gyro::Element> kA3 = {0, 3, 2, 1, 4, 7, 6, 5};
inline const std::vector<gyro::Element> kA4 = {0, 5, 2, 7, 4, 1, 6, 3, 8, 13, 10, 15, 12, 9, 14, 11};

}  // namespace reference
