#include "evc/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "evc/errors.hpp"

namespace evc {
namespace {

bool parse_id(const std::string& token, std::size_t& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::optional<std::size_t> declared_n;
  std::size_t max_id_plus_one = 0;
  bool seen_content = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    auto fail = [&](const std::string& why) {
      throw GraphError("line " + std::to_string(line_no) + ": " + why);
    };
    if (tokens.size() != 2) fail("expected two fields, got " + std::to_string(tokens.size()));
    std::size_t a = 0;
    std::size_t b = 0;
    if (!seen_content && tokens[0] == "n") {
      if (!parse_id(tokens[1], a)) fail("bad vertex count '" + tokens[1] + "'");
      declared_n = a;
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (!parse_id(tokens[0], a) || !parse_id(tokens[1], b)) {
      fail("bad vertex id in '" + line + "'");
    }
    if (a > 0xFFFFFFFEu || b > 0xFFFFFFFEu) fail("vertex id out of range");
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    max_id_plus_one = std::max({max_id_plus_one, a + 1, b + 1});
  }
  return Graph::build(declared_n.value_or(max_id_plus_one), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open edge list '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace evc
