#include "charp/ringfile.hpp"

#include <fstream>
#include <sstream>

#include "charp/parse.hpp"

namespace charp {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    piece = trim(piece);
    if (!piece.empty()) out.push_back(piece);
  }
  return out;
}

}  // namespace

RingFile parse_ring_file_text(const std::string& text) {
  std::optional<std::uint64_t> p;
  std::vector<std::string> vars;
  std::string quotient_text;
  RingFlags flags;

  std::stringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = trim(line.substr(0, line.find('#')));
    if (stripped.empty()) continue;
    std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ParseError("ring file line " + std::to_string(lineno) +
                           ": expected key = value",
                       0);
    std::string key = trim(stripped.substr(0, eq));
    std::string value = trim(stripped.substr(eq + 1));
    if (key == "p") {
      if (value.empty() || value.size() > 10 ||
          value.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("ring file: p must be a plain integer, got '" +
                             value + "'",
                         0);
      p = std::stoull(value);
    } else if (key == "vars") {
      vars = split_commas(value);
    } else if (key == "quotient") {
      quotient_text = value;
    } else if (key == "flags") {
      for (const std::string& f : split_commas(value)) {
        if (f == "domain")
          flags.is_domain = true;
        else if (f == "cm")
          flags.is_cm = true;
        else if (f == "equidim_excellent")
          flags.is_equidim_excellent = true;
        else
          throw ParseError("unknown flag '" + f + "'", 0);
      }
    } else {
      throw ParseError("unknown ring file key '" + key + "'", 0);
    }
  }
  if (!p) throw ParseError("ring file: missing p", 0);
  if (vars.empty()) throw ParseError("ring file: missing vars", 0);

  RingFile out;
  out.ring = make_ring(*p, vars);
  out.quotient = quotient_text.empty()
                     ? IdealHandle(out.ring)
                     : IdealHandle(out.ring,
                                   parse_poly_list(quotient_text, out.ring));
  out.flags = flags;
  out.source = text;
  return out;
}

RingFile parse_ring_file(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_ring_file_text(buf.str());
}

RingFile load_ring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open ring file '" + path + "'");
  return parse_ring_file(in);
}

}  // namespace charp
