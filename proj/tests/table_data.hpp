#pragma once

// Rows of the published tetrahedron and pentahedron tables, kept verbatim so the
// tests check the library catalog against the printed values.

#include <string>
#include <vector>

namespace table_data {

struct TetraRow {
  int S, U;
  const char* cx;
  const char* cy;
  const char* dx;
  const char* dy;
  const char* dz;
  const char* faces;     // ABC ABD ACD BCD
  const char* vertices;  // A B C D
  const char* edges;     // AB AC AD BC BD CD
};

inline const std::vector<TetraRow>& tetra_rows() {
  static const std::vector<TetraRow> rows = {
      {2, 2, "3.2", "1.9", "-2.2", "0.3", "1.8", "0011", "0011", "100001"},
      {2, 3, "1.9", "5.3", "1.9", "-0.9", "5.2", "0011", "1011", "011001"},
      {2, 4, "-0.9", "5.3", "1.9", "0.9", "5.2", "0011", "1111", "110011"},
      {3, 2, "1.0", "2.7", "-0.9", "-4.1", "3.4", "0111", "0011", "001011"},
      {3, 3, "1.0", "5.7", "0.5", "-0.5", "1.3", "1011", "1011", "011101"},
      {3, 4, "0.5", "2.8", "0.5", "-0.7", "1.2", "1011", "1111", "011111"},
      {4, 2, "3.2", "3.8", "-2.2", "-2.9", "2.5", "1111", "0011", "110011"},
      {4, 3, "1.9", "5.3", "1.9", "5.0", "1.8", "1111", "1011", "011111"},
  };
  return rows;
}

struct PentaRow {
  int S, U;
  const char* cx;
  const char* cy;
  const char* dx;
  const char* dy;
  const char* ex;
  const char* ey;
  const char* ez;
};

inline const std::vector<PentaRow>& penta_rows() {
  static const std::vector<PentaRow> rows = {
      {2, 5, "1.0", "1.7", "0.5", "-0.3", "2.1", "1.2", "1.2"},
      {3, 5, "1.0", "1.7", "3.8", "-2.2", "1.6", "0.9", "0.9"},
      {4, 5, "2.5", "1.4", "3.8", "-2.2", "2.0", "1.2", "1.2"},
      {5, 2, "1.0", "1.7", "0.9", "0.5", "-0.6", "-1.1", "-1.1"},
      {5, 3, "1.0", "1.7", "0.9", "0.5", "1.5", "2.6", "2.6"},
      {5, 4, "1.0", "1.7", "1.3", "0.8", "1.5", "2.6", "2.6"},
  };
  return rows;
}

}  // namespace table_data
