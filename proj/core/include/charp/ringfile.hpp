#ifndef CHARP_RINGFILE_HPP
#define CHARP_RINGFILE_HPP

#include <istream>
#include <string>

#include "charp/quotient.hpp"

namespace charp {

// Ring specification files: one `key = value` pair per line, with '#'
// comments and blank lines ignored.  Keys:
//
//   p        = 7                      (required; prime)
//   vars     = x, y, z                (required; distinct identifiers)
//   quotient = x^3+y^3+z^3            (optional; comma-separated list)
//   flags    = domain, cm, equidim_excellent   (optional)
//
struct RingFile {
  RingPtr ring;
  IdealHandle quotient;
  RingFlags flags;
  std::string source;  // verbatim file content, echoed into reports

  QuotientCtx context() const { return QuotientCtx(ring, quotient, flags); }
};

RingFile parse_ring_file(std::istream& in);
RingFile parse_ring_file_text(const std::string& text);
RingFile load_ring_file(const std::string& path);

}  // namespace charp

#endif
