#include "spinetorsion/io.hpp"

#include <fstream>
#include <sstream>

namespace spinetorsion {

namespace {

[[noreturn]] void syntax(int line, const std::string& msg) {
  throw SpineError(ErrorCode::Syntax, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

int parse_int(const std::string& s, int line) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    syntax(line, "expected a non-negative integer, got '" + s + "'");
  try {
    return std::stoi(s);
  } catch (const std::out_of_range&) {
    syntax(line, "integer out of range: '" + s + "'");
  }
}

std::pair<int, int> parse_tet_face(const std::string& s, int line) {
  auto dot = s.find('.');
  if (dot == std::string::npos) syntax(line, "expected TET.FACE, got '" + s + "'");
  int f = parse_int(s.substr(dot + 1), line);
  if (f > 3) syntax(line, "face index must be 0..3 in '" + s + "'");
  return {parse_int(s.substr(0, dot), line), f};
}

Perm4 parse_perm(const std::string& word, int face, int other_face, int line) {
  if (word.size() != 3) syntax(line, "permutation must have three symbols: '" + word + "'");
  std::array<int, 4> img{};
  auto corners = face_corners(face);
  int seen = 1 << other_face;
  for (int k = 0; k < 3; ++k) {
    char c = word[k];
    if (c < '0' || c > '3') syntax(line, "malformed permutation '" + word + "'");
    int v = c - '0';
    if (seen & (1 << v)) syntax(line, "malformed permutation '" + word + "'");
    seen |= 1 << v;
    img[corners[k]] = v;
  }
  img[face] = other_face;
  return Perm4(img[0], img[1], img[2], img[3]);
}

}  // namespace

RawSpine parse_spine_text(const std::string& text) {
  RawSpine raw;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header = false, have_tets = false, have_branching = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto w = split_words(line);
    if (w.empty()) continue;
    if (!header) {
      if (w.size() != 2 || w[0] != "branched-spine") syntax(lineno, "missing 'branched-spine' header");
      if (w[1] != "1") syntax(lineno, "unsupported format version " + w[1]);
      header = true;
    } else if (w[0] == "tets") {
      if (have_tets || w.size() != 2) syntax(lineno, "malformed 'tets' line");
      raw.tets = parse_int(w[1], lineno);
      if (raw.tets == 0) syntax(lineno, "tetrahedron count must be positive");
      have_tets = true;
    } else if (w[0] == "glue") {
      if (w.size() != 6 || w[2] != "->" || w[4] != ":") syntax(lineno, "expected 'glue T.F -> T.F : PERM'");
      auto [t, f] = parse_tet_face(w[1], lineno);
      auto [u, g] = parse_tet_face(w[3], lineno);
      raw.gluings.push_back({t, f, u, g, parse_perm(w[5], f, g, lineno), lineno});
    } else if (w[0] == "branching") {
      if (have_branching) syntax(lineno, "duplicate 'branching' line");
      have_branching = true;
      for (std::size_t i = 1; i < w.size(); ++i) {
        const std::string& tok = w[i];
        auto colon = tok.find(':');
        if (colon == std::string::npos || tok.size() != colon + 3)
          syntax(lineno, "malformed branching token '" + tok + "'");
        int t = parse_int(tok.substr(0, colon), lineno);
        int a = tok[colon + 1] - '0', b = tok[colon + 2] - '0';
        if (a < 0 || a > 3 || b < 0 || b > 3 || a == b)
          syntax(lineno, "malformed branching token '" + tok + "'");
        raw.branching.push_back({t, a, b});
      }
    } else if (w[0] == "orient") {
      if (raw.orientation || w.size() != 2) syntax(lineno, "malformed 'orient' line");
      std::vector<int> bits;
      for (char c : w[1]) {
        if (c == '+') bits.push_back(1);
        else if (c == '-') bits.push_back(-1);
        else syntax(lineno, "orientation bits must be '+' or '-'");
      }
      raw.orientation = bits;
    } else {
      syntax(lineno, "unknown directive '" + w[0] + "'");
    }
  }
  if (!header) syntax(lineno, "empty spine file");
  if (!have_tets) syntax(lineno, "missing 'tets' line");
  if (!have_branching) syntax(lineno, "missing 'branching' line");
  return raw;
}

std::string serialize_spine(const BranchedSpine& spine) {
  RawSpine raw = spine.to_raw();
  std::ostringstream os;
  os << "branched-spine 1\n";
  os << "tets " << raw.tets << "\n";
  for (const auto& g : raw.gluings) {
    os << "glue " << g.tet << "." << g.face << " -> " << g.other_tet << "." << g.other_face << " : ";
    for (int v : face_corners(g.face)) os << g.perm[v];
    os << "\n";
  }
  os << "branching";
  for (const auto& [t, a, b] : raw.branching) os << " " << t << ":" << a << b;
  os << "\norient ";
  for (int o : *raw.orientation) os << (o > 0 ? '+' : '-');
  os << "\n";
  return os.str();
}

BranchedSpine read_spine(const std::string& text) { return validate(parse_spine_text(text)); }

BranchedSpine read_spine_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpineError(ErrorCode::InvalidArgument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return read_spine(ss.str());
}

void write_spine_file(const std::string& path, const BranchedSpine& spine) {
  std::ofstream out(path);
  if (!out) throw SpineError(ErrorCode::InvalidArgument, "cannot write " + path);
  out << serialize_spine(spine);
}

std::vector<MoveRecord> parse_move_log(const std::string& text) {
  std::vector<MoveRecord> log;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto w = split_words(line);
    if (w.empty()) continue;
    if (w[0] == "positive" && w.size() == 3)
      log.push_back({true, parse_int(w[1], lineno), parse_int(w[2], lineno)});
    else if (w[0] == "negative" && w.size() == 2)
      log.push_back({false, parse_int(w[1], lineno), 0});
    else
      syntax(lineno, "expected 'positive FACE VARIANT' or 'negative EDGE'");
  }
  return log;
}

std::string serialize_move_log(const std::vector<MoveRecord>& log) {
  std::ostringstream os;
  for (const auto& m : log) {
    if (m.positive) os << "positive " << m.site << " " << m.variant << "\n";
    else os << "negative " << m.site << "\n";
  }
  return os.str();
}

}  // namespace spinetorsion
