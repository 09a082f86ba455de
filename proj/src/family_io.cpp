#include "vcu/family_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace vcu {
namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

int parse_int(std::string_view tok, int line, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(tok) + "'");
  return v;
}

}  // namespace

std::string format_subset(SubsetMask s) {
  if (s.empty()) return "-";
  std::string out;
  s.for_each([&](int i) {
    if (!out.empty()) out += ',';
    out += std::to_string(i + 1);
  });
  return out;
}

std::string serialize_family(const SetFamily& f) {
  std::vector<SubsetMask> sets(f.begin(), f.end());
  std::stable_sort(sets.begin(), sets.end(), [](SubsetMask a, SubsetMask b) { return a.size() < b.size(); });
  std::string out = "n=" + std::to_string(f.n()) + "\n";
  for (SubsetMask s : sets) out += format_subset(s) + "\n";
  return out;
}

SetFamily parse_family(std::string_view text) {
  std::optional<GroundSet> ground;
  std::vector<SubsetMask> sets;
  std::unordered_set<SubsetMask> seen;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!ground) {
      if (line.substr(0, 2) != "n=") throw ParseError(line_no, "expected header 'n=<int>'");
      const int n = parse_int(trim(line.substr(2)), line_no, "ground-set size");
      if (n < 1 || n > kMaxGround) throw ParseError(line_no, "ground-set size must lie in [1, 128]");
      ground = GroundSet(n);
      continue;
    }

    SubsetMask s;
    if (line != "-") {
      int prev = 0;
      std::string_view rest = line;
      while (true) {
        const auto comma = rest.find(',');
        const int e = parse_int(trim(rest.substr(0, comma)), line_no, "element");
        if (e < 1 || e > ground->n) throw ParseError(line_no, "element " + std::to_string(e) + " outside [n]");
        if (e <= prev) throw ParseError(line_no, "elements must be strictly ascending");
        s.set(e - 1);
        prev = e;
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
    }
    if (!seen.insert(s).second) throw ParseError(line_no, "duplicate set");
    sets.push_back(s);
  }
  if (!ground) throw ParseError(std::max(line_no, 1), "missing header 'n=<int>'");
  return SetFamily(*ground, std::move(sets));
}

SetFamily read_family_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_family(ss.str());
}

void write_family_file(const std::filesystem::path& path, const SetFamily& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_family(f);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace vcu
