#ifndef K3AUTO_TESTS_TABLE_FIXTURE_HPP
#define K3AUTO_TESTS_TABLE_FIXTURE_HPP

// Transcribed by hand from the published table of the 16 cases. Blank
// cells in the #C, rk Pic and k_sigma4 columns repeat the value above.

#include <array>
#include <vector>

#include "k3auto/classifier.hpp"

namespace k3auto::fixture {

inline std::vector<ClassificationRow> table_rows() {
  const std::string o4 = "order four";
  return {
      {1, 3, 3, 2, 0, 2, 10, 0, 2, 2, 0, 0, 0, {"identity", o4}},
      {2, 3, 3, 2, 0, 2, 10, 0, 2, 2, 0, 0, 0, {"translation of order two", o4}},
      {3, 3, 3, 2, 0, 2, 10, 0, 2, 2, 0, 0, 0, {"translation of order four", o4}},
      {4, 5, 1, 2, 0, 2, 10, 0, 6, 0, 2, 4, 0, {"involution", o4}},
      {5, 6, 4, 2, 1, 1, 14, 4, 4, 1, 1, 2, 0, {"identity", "reflection of IV*"}},
      {6, 6, 4, 2, 1, 1, 14, 4, 4, 1, 1, 2, 0, {"translation of order two", "reflection of IV*"}},
      {7, 6, 4, 2, 1, 1, 14, 4, 4, 1, 1, 2, 0, {"translation of order four", "reflection of IV*"}},
      {8, 6, 6, 1, 2, 1, 14, 4, 2, 2, 0, 0, 0, {o4, "rotation of order 2 on I_8"}},
      {9, 4, 4, 3, 0, 1, 14, 4, 2, 2, 0, 0, 0, {o4, "rotation of order 4 on I_8"}},
      {10, 8, 4, 1, 2, 1, 14, 4, 6, 0, 2, 4, 0, {o4, "reflection on I_8"}},
      {11, 10, 0, 2, 1, 1, 14, 4, 10, 3, 3, 4, 1, {"involution", "preserves each curve of IV*"}},
      {12, 10, 2, 1, 2, 1, 14, 4, 8, 4, 2, 2, 1, {o4, "preserves each curve of I_8"}},
      {13, 9, 9, 0, 4, 1, 18, 8, 2, 2, 0, 0, 0, {o4, "rotation of order 2 on I_16"}},
      {14, 5, 5, 4, 0, 1, 18, 8, 2, 2, 0, 0, 0, {o4, "rotation of order 4 on I_16"}},
      {15, 11, 7, 0, 4, 1, 18, 8, 6, 0, 2, 4, 0, {o4, "reflection on I_16"}},
      {16, 17, 1, 0, 4, 1, 18, 8, 14, 6, 4, 4, 2, {o4, "preserves each curve of I_16"}},
  };
}

/// (k, N, rk Pic) lists: sigma fixes an elliptic curve; only sigma^2 does;
/// neither does.
inline std::array<std::vector<KNPic>, 3> theorem_groups() {
  return {{
      {{0, 2, 10}, {0, 4, 14}},
      {{0, 2, 10}, {0, 6, 10}, {0, 4, 14}, {1, 10, 14}},
      {{0, 2, 10}, {0, 4, 14}, {0, 2, 14}, {0, 6, 14}, {1, 8, 14}, {0, 2, 18}, {0, 6, 18}, {2, 14, 18}},
  }};
}

}  // namespace k3auto::fixture

#endif  // K3AUTO_TESTS_TABLE_FIXTURE_HPP
