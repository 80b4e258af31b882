#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "indpro/diagrams.hpp"
#include "indpro/pi_window.hpp"
#include "indpro/windows.hpp"

namespace indpro::io {

// Malformed text: not JSON, or missing/ill-typed fields.
struct parse_error : std::runtime_error {
  int line;
  int column;
  parse_error(int line_, int column_, const std::string& what)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(column_) + ": " + what),
        line(line_), column(column_) {}
};

// Well-formed text whose payload violates a structural invariant; the message
// names the invariant and the offending indices.
struct semantic_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class DocKind { ind_window, pro_window, pi_window, roof, u_roof, ses, three_squares };

struct Document {
  DocKind kind;
  std::variant<IndWindow, ProWindow, PiWindow, IndRoof, PiRoof, SesTriple, ThreeSquaresInstance>
      payload;
};

Document doc_of(IndWindow x);
Document doc_of(ProWindow y);
Document doc_of(PiWindow x);
Document doc_of(IndRoof r);
Document doc_of(PiRoof r);
Document doc_of(SesTriple t);
Document doc_of(ThreeSquaresInstance inst);

Document parse_document(const std::string& text);
std::string serialize(const Document& doc);

bool operator==(const Document& a, const Document& b);

}  // namespace indpro::io
