#include "nearring/table_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nearring/pgroup.hpp"

namespace nearring {

std::string table_to_csv(const OperationTable& table) {
  std::string out;
  const std::size_t n = table.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out += ',';
      out += std::to_string(table.at(i, j));
    }
    out += '\n';
  }
  return out;
}

OperationTable table_from_csv(std::string_view text) {
  std::vector<Rank> cells;
  std::size_t rows = 0, cols = 0;
  std::size_t line_start = 0;
  while (line_start < text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t count = 0;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      std::size_t comma = line.find(',', pos);
      if (comma == std::string_view::npos) comma = line.size();
      const std::string_view cell = line.substr(pos, comma - pos);
      Rank v = 0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc{} || ptr != cell.data() + cell.size() || cell.empty()) {
        throw MapFormatError("bad CSV cell at byte offset " +
                             std::to_string(line_start + pos));
      }
      cells.push_back(v);
      ++count;
      pos = comma + 1;
    }
    if (rows == 0) cols = count;
    else if (count != cols) throw MapFormatError("ragged CSV row " + std::to_string(rows));
    ++rows;
    line_start = line_end + 1;
  }
  if (rows != cols) throw MapFormatError("CSV table is not square");
  return OperationTable(rows, std::move(cells));
}

std::string table_to_json(const OperationTable& table) {
  nlohmann::ordered_json j;
  j["order"] = table.order();
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < table.order(); ++i) {
    const auto r = table.row(i);
    rows.push_back(std::vector<Rank>(r.begin(), r.end()));
  }
  j["table"] = rows;
  return j.dump() + "\n";
}

OperationTable table_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const auto n = j.at("order").get<std::size_t>();
    std::vector<Rank> cells;
    for (const auto& row : j.at("table")) {
      const auto r = row.get<std::vector<Rank>>();
      if (r.size() != n) throw MapFormatError("table row has the wrong length");
      cells.insert(cells.end(), r.begin(), r.end());
    }
    return OperationTable(n, std::move(cells));
  } catch (const nlohmann::json::parse_error& e) {
    throw MapFormatError("table JSON invalid at byte offset " + std::to_string(e.byte));
  } catch (const nlohmann::json::exception& e) {
    throw MapFormatError(std::string("table JSON has the wrong shape: ") + e.what());
  }
}

MapTriple maps_from_mul_table(const GroupParams& g, const OperationTable& table) {
  if (table.order() != g.order()) {
    throw MapFormatError("table order " + std::to_string(table.order()) + " does not match " +
                         g.to_string());
  }
  const Rank rb = rank(g, kGenB);
  const auto n = g.order();
  std::vector<Residue> a(n), b(n), c(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    const Element row = unrank(g, table.at(x, rb));
    a[x] = row.x1;
    b[x] = row.x2;
    c[x] = row.x3;
  }
  MapTriple maps(g, std::move(a), std::move(b), std::move(c));
  if (mul_table(maps) != table) {
    throw MapFormatError("multiplication table is not determined by its column at b");
  }
  return maps;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << contents;
}

}  // namespace nearring
