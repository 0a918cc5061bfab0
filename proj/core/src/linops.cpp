#include "hartree/linops.hpp"

#include <cmath>
#include <string>

#include "hartree/coulomb.hpp"
#include "hartree/errors.hpp"

namespace hartree {

const char* to_string(OperatorKind kind) noexcept {
  switch (kind) {
    case OperatorKind::plus_nr:
      return "plus-nr";
    case OperatorKind::minus_nr:
      return "minus-nr";
    case OperatorKind::plus_rel:
      return "plus-rel";
  }
  return "unknown";
}

namespace {

void require_dense_size(const GroundState& state) {
  if (state.grid()->n() > max_dense_size)
    throw SizeExceeded("dense sector assembly limited to n <= " + std::to_string(max_dense_size));
}

void require_model(const GroundState& s, Model model) {
  if (s.params.model != model)
    throw InvalidArgument(std::string("operator expects a ") + to_string(model) + " ground state");
}

void require_sector(int l) {
  if (l < 0 || l > max_sector) throw InvalidArgument("sector index out of range: " + std::to_string(l));
}

RadialProfile nonlocal(int l, const RadialProfile& Q, const RadialProfile& f) {
  return l == 0 ? apply_newton_linearized(Q, f) : apply_w_sector(l, Q, f);
}

// lambda f - phi f + nonlocal term; the part shared by every L+ variant.
struct LocalPart {
  const GroundState& state;
  RadialProfile phi;
  double shift;
  int l;

  RadialProfile operator()(const RadialProfile& f) const {
    RadialProfile out = f * shift;
    out -= hadamard(phi, f);
    out += nonlocal(l, state.Q, f);
    return out;
  }
};

RadialProfile coulomb_of(const GroundState& s) { return newton_potential(hadamard(s.Q, s.Q)); }

}  // namespace

RadialProfile apply_lplus_nr(int l, const GroundState& state, const RadialProfile& f) {
  require_model(state, Model::nonrelativistic);
  require_sector(l);
  const LocalPart local{state, coulomb_of(state), state.multiplier, l};
  RadialProfile out = apply_sector_laplacian(f, l) * (1.0 / (2.0 * state.params.m));
  out += local(f);
  return out;
}

RadialProfile apply_lminus(const GroundState& state, const RadialProfile& f) {
  require_model(state, Model::nonrelativistic);
  RadialProfile out = apply_sector_laplacian(f, 0) * (1.0 / (2.0 * state.params.m));
  out += f * state.multiplier;
  out -= hadamard(coulomb_of(state), f);
  return out;
}

RadialProfile apply_lplus_rel(int l, const GroundState& state, const RadialProfile& f) {
  require_model(state, Model::relativistic);
  require_sector(l);
  const double m = state.params.m;
  const double c = state.params.c;
  const LocalPart local{state, coulomb_of(state), state.multiplier + m * c * c, l};
  RadialProfile out = kinetic_operator_sector(state.grid(), l, m, c)->apply(f);
  out += local(f);
  return out;
}

SectorOperator assemble_sector_nr(int l, const GroundState& state) {
  require_model(state, Model::nonrelativistic);
  require_sector(l);
  require_dense_size(state);
  const LocalPart local{state, coulomb_of(state), state.multiplier, l};
  const double k = 1.0 / (2.0 * state.params.m);
  auto apply = [&](const RadialProfile& f) {
    RadialProfile out = apply_sector_laplacian(f, l) * k;
    out += local(f);
    return out;
  };
  return SectorOperator{l, OperatorKind::plus_nr, SymmetricOperator::assemble(state.grid(), apply), state.params,
                        state.multiplier};
}

SectorOperator assemble_lminus(const GroundState& state) {
  require_model(state, Model::nonrelativistic);
  require_dense_size(state);
  const RadialProfile phi = coulomb_of(state);
  const double k = 1.0 / (2.0 * state.params.m);
  auto apply = [&](const RadialProfile& f) {
    RadialProfile out = apply_sector_laplacian(f, 0) * k;
    out += f * state.multiplier;
    out -= hadamard(phi, f);
    return out;
  };
  return SectorOperator{0, OperatorKind::minus_nr, SymmetricOperator::assemble(state.grid(), apply), state.params,
                        state.multiplier};
}

SectorOperator assemble_sector_rel(int l, const GroundState& state) {
  require_model(state, Model::relativistic);
  require_sector(l);
  require_dense_size(state);
  const double m = state.params.m;
  const double c = state.params.c;
  const LocalPart local{state, coulomb_of(state), state.multiplier + m * c * c, l};
  SymmetricOperator op = SymmetricOperator::assemble(state.grid(), [&](const RadialProfile& f) { return local(f); });
  op += *kinetic_operator_sector(state.grid(), l, m, c);
  return SectorOperator{l, OperatorKind::plus_rel, std::move(op), state.params, state.multiplier};
}

}  // namespace hartree
