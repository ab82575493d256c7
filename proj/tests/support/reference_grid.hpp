#pragma once

// Reference results for a 19-backend evaluation, embedded as an aggregation fixture.
// Cells are 'P' or 'F' for tests T1..T20 in order.

#include <string>
#include <vector>

#include "c2j/matrix.hpp"

namespace fixture {

struct GridRow {
  const char* name;
  const char* cells;
};

inline const std::vector<GridRow>& reference_grid() {
  static const std::vector<GridRow> rows = {
      {"codegemma:7b", "FFFFFFFFFFFFFFFFFFFF"},
      {"codeqwen", "PPFPPPFFPFPFPFPFPFFP"},
      {"mistral-nemo", "PPFPFFFFFFPFFPPFPFFP"},
      {"llama3.1:8b", "FFFFFFFFFFFFFFFFFFFF"},
      {"gemma3:12b", "FFFFFFFFFFFFFFFFFFFF"},
      {"dolphincoder:15b", "FFFFFFFFFFFFFFFFFFFF"},
      {"mistral", "PFFFFFFFPFFFPPFFPFFP"},
      {"qwen2.5-coder:7b", "FFFFFFFFFFFFFFFFFFFF"},
      {"falcon3:10b", "FFFFFFFFFFFFFFFFFFFF"},
      {"granite-code:8b", "FFFFFFFFFFFFFFFFFFFF"},
      {"yi-coder:9b", "FFFFFFFFFFFFFFFFFFFF"},
      {"deepcoder:14b", "FFFFFFFFFFFFFFFFFFFF"},
      {"opencoder:8b", "FFFFFFFFFFFFFFFFFFFF"},
      {"deepseek-r1:14b", "FFFFFFFFFFFFFFFFFFFF"},
      {"deepseek-coder-v2", "PPPPPPFPFFPFPPFPPFFP"},
      {"qwen3:14b", "FFFFFFFFFFFFFFFFFFFF"},
      {"starcoder2:15b", "FFFFFFFFFFFFFFFFFFFF"},
      {"codellama", "FFFFFFFFFFFFFFFFFFFF"},
      {"phi4", "PPFPPFFFPFPFPPFFPPFP"},
  };
  return rows;
}

inline c2j::ResultMatrix grid_as_matrix(
    const std::vector<std::string>& backend_subset = {}) {
  c2j::ResultMatrix m;
  m.timestamp = "2025-01-01T00:00:00Z";
  for (int i = 1; i <= 20; ++i) m.tests.push_back("T" + std::to_string(i));
  for (const auto& row : reference_grid()) {
    if (!backend_subset.empty()) {
      bool wanted = false;
      for (const auto& b : backend_subset)
        if (b == row.name) wanted = true;
      if (!wanted) continue;
    }
    m.backends.push_back(row.name);
    for (int i = 0; i < 20; ++i) {
      c2j::ResultCell cell;
      cell.backend = row.name;
      cell.test = m.tests[i];
      if (row.cells[i] == 'P') {
        cell.verdict.outcome = c2j::Outcome::Pass;
      } else {
        cell.verdict.outcome = c2j::Outcome::OutputMismatch;
        cell.verdict.category = c2j::FailureCategory::SemanticLogic;
        cell.verdict.divergence_offset = 0;
      }
      m.cells.push_back(std::move(cell));
    }
  }
  return m;
}

}  // namespace fixture
