#pragma once

#include <stdexcept>
#include <string>

namespace unico {

// Base for all domain errors; `code` is a stable machine-readable tag.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

struct NotAPartialOrder : Error {
  NotAPartialOrder(int a_, int b_, const std::string& msg)
      : Error("not_a_partial_order", msg), a(a_), b(b_) {}
  int a, b;
};

struct NotALattice : Error {
  NotALattice(int a_, int b_, const std::string& msg)
      : Error("not_a_lattice", msg), a(a_), b(b_) {}
  int a, b;
};

struct NotDistributive : Error {
  NotDistributive(int x_, int y_, int z_, const std::string& msg)
      : Error("not_distributive", msg), x(x_), y(y_), z(z_) {}
  int x, y, z;  // witness triple: x ∧ (y ∨ z) != (x ∧ y) ∨ (x ∧ z)
};

struct EnumerationCapExceeded : Error {
  EnumerationCapExceeded(int frame_size_, int cap_, const std::string& msg)
      : Error("enumeration_cap_exceeded", msg), frame_size(frame_size_), cap(cap_) {}
  int frame_size, cap;
};

struct NotComplemented : Error {
  explicit NotComplemented(const std::string& msg) : Error("not_complemented", msg) {}
};

struct NotASubset : Error {
  explicit NotASubset(const std::string& msg) : Error("not_a_subset", msg) {}
};

struct NotLocallyConnected : Error {
  explicit NotLocallyConnected(const std::string& msg)
      : Error("not_locally_connected", msg) {}
};

struct MissingEmptyOrFull : Error {
  explicit MissingEmptyOrFull(const std::string& msg)
      : Error("missing_empty_or_full", msg) {}
};

struct NotClosedUnderUnion : Error {
  NotClosedUnderUnion(int i_, int j_, const std::string& msg)
      : Error("not_closed_under_union", msg), i(i_), j(j_) {}
  int i, j;
};

struct NotClosedUnderIntersection : Error {
  NotClosedUnderIntersection(int i_, int j_, const std::string& msg)
      : Error("not_closed_under_intersection", msg), i(i_), j(j_) {}
  int i, j;
};

struct ParseError : Error {
  ParseError(std::string where_, const std::string& msg)
      : Error("parse_error", msg), where(std::move(where_)) {}
  std::string where;  // file / field / byte position
};

}  // namespace unico
