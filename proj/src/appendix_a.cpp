#include "goldbach/report.hpp"

namespace goldbach {

namespace {

// Columns: E, PE, NPE, P(m), E/2, E/2 factors <= P(m), observed GP, GR %,
// calculated GP, error % of calculated GP. Typos are kept as printed.
const std::vector<RowValues> kReference = {
    {128, 127, 31, 11, 64, "2", 3, 10, 4, 33},
    {210, 199, 46, 13, 105, "2,3,5,7", 19, 41, 17, -11},
    {222, 211, 47, 13, 111, "P", 11, 23, 5, -55},
    {502, 499, 95, 19, 251, "P", 15, 16, 10, -33},
    {512, 509, 97, 19, 256, "2", 11, 11, 10, -9},
    {678, 677, 123, 23, 339, "3", 28, 23, 24, -14},
    {1006, 997, 168, 31, 503, "P", 18, 11, 16, -11},
    {1024, 1021, 172, 31, 512, "2", 22, 13, 16, -27},
    {1510, 1499, 239, 37, 755, "5", 33, 14, 30, -9},
    {2018, 2017, 306, 43, 1009, "P", 28, 9, 27, -4},
    {2048, 2039, 309, 43, 1024, "2", 25, 8, 27, 8},
    {2490, 2477, 367, 47, 1245, "3,5", 94, 26, 85, -10},
    {3022, 3019, 433, 53, 1511, "P", 42, 10, 37, -12},
    {3514, 3511, 490, 59, 1757, "7", 51, 10, 50, -2},
    {4006, 4003, 552, 61, 2003, "P", 52, 9, 46, -12},
    {4096, 4093, 564, 61, 2048, "2", 53, 9, 47, -11},
    {4690, 4679, 633, 67, 2345, "5,7", 95, 15, 83, -13},
    {5006, 5003, 670, 67, 2503, "P", 63, 9, 56, -11},
    {5610, 5591, 738, 73, 2805, "2,3,5,11,17", 198, 27, 186, -6},
    {6002, 5987, 783, 73, 3001, "P", 62, 8, 63, 2},
    {6578, 6577, 851, 79, 3289, "2,11,13,23", 89, 10, 86, -3},
    {7022, 7019, 903, 83, 3511, "P", 72, 8, 70, -3},
    {7314, 7309, 932, 83, 3657, "2,3,23,53", 172, 18, 156, -9},
    {8002, 7993, 1007, 89, 4001, "P", 80, 8, 78, -3},
    {8192, 8191, 1028, 89, 4096, "2", 76, 7, 80, 5},
    {8610, 8609, 1072, 89, 4305, "2,3,5,7,41", 282, 26, 276, -2},
    {9014, 9013, 1021, 89, 4507, "P", 96, 9, 88, -8},
    {9510, 9497, 1177, 97, 4755, "3,5", 253, 21, 243, -4},
    {9998, 9973, 1229, 97, 4999, "P", 99, 8, 96, -3},
};

}  // namespace

std::span<const RowValues> appendix_a_reference() { return kReference; }

}  // namespace goldbach
