#include "cli/render.hpp"

#include <algorithm>
#include <sstream>

namespace ewb::cli {

std::string aligned_grid(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    if (row.size() > width.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    const auto& row = cells[r];
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 1) out << " |";
      if (c > 0) out << "  ";
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
    if (r == 0) {
      std::size_t total = 0;
      for (std::size_t c = 1; c < width.size(); ++c) total += width[c] + 2;
      out << std::string(width.empty() ? 0 : width[0] + 1, '-') << '+' << std::string(total, '-') << '\n';
    }
  }
  return out.str();
}

std::string eulerian_text(const EulerianRows& rows) {
  const int widest = rows.empty() ? 0 : static_cast<int>(rows.rbegin()->second.size());
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"n\\i"});
  for (int i = 1; i <= widest; ++i) cells[0].push_back(std::to_string(i));
  for (const auto& [n, row] : rows) {
    std::vector<std::string> line{std::to_string(n)};
    for (const auto& v : row) line.push_back(to_decimal(v));
    cells.push_back(std::move(line));
  }
  return aligned_grid(cells);
}

std::string eulerian_csv(const EulerianRows& rows) {
  std::size_t widest = 0;
  for (const auto& [n, row] : rows) widest = std::max(widest, row.size());
  std::ostringstream out;
  out << "n\\i";
  for (std::size_t i = 1; i <= widest; ++i) out << ',' << i;
  out << '\n';
  for (const auto& [n, row] : rows) {
    out << n;
    for (const auto& v : row) out << ',' << v;
    out << '\n';
  }
  return out.str();
}

std::string two_sided_text(const std::vector<TwoSidedTable>& tables) {
  std::ostringstream out;
  for (std::size_t k = 0; k < tables.size(); ++k) {
    const auto& t = tables[k];
    if (k > 0) out << '\n';
    out << "n = " << t.n() << '\n';
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"i\\j"});
    for (int j = 1; j <= t.n(); ++j) cells[0].push_back(std::to_string(j));
    for (int i = 1; i <= t.n(); ++i) {
      std::vector<std::string> line{std::to_string(i)};
      for (int j = 1; j <= t.n(); ++j) line.push_back(to_decimal(t.at(i, j)));
      cells.push_back(std::move(line));
    }
    out << aligned_grid(cells);
  }
  return out.str();
}

std::string two_sided_csv(const std::vector<TwoSidedTable>& tables) {
  int widest = 0;
  for (const auto& t : tables) widest = std::max(widest, t.n());
  std::ostringstream out;
  out << "n,i\\j";
  for (int j = 1; j <= widest; ++j) out << ',' << j;
  out << '\n';
  for (const auto& t : tables) {
    for (int i = 1; i <= t.n(); ++i) {
      out << t.n() << ',' << i;
      for (int j = 1; j <= widest; ++j) {
        out << ',';
        if (j <= t.n()) out << t.at(i, j);
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace ewb::cli
