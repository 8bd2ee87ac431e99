#include "fourcalc/lattice/json.hpp"

#include "fourcalc/errors.hpp"

namespace fourcalc::lattice {

nlohmann::json to_json(const IntMatrix& m) { return m.to_rows(); }

IntMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw InputError("matrix row must be an array");
    std::vector<std::int64_t> row;
    for (const auto& x : r) {
      if (!x.is_number_integer()) throw InputError("matrix entries must be integers");
      row.push_back(x.get<std::int64_t>());
    }
    if (!rows.empty() && row.size() != rows.front().size()) throw InputError("ragged matrix");
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

nlohmann::json to_json(const IntLattice& l) {
  nlohmann::json j = {{"name", l.name()}, {"labels", l.basis_labels()}, {"gram", to_json(l.gram())}};
  if (const auto& alt = l.alternate_basis()) {
    j["alternate"] = {{"labels", alt->labels}, {"vectors", to_json(alt->vectors)}};
  }
  return j;
}

namespace {

IntMatrix gram_from_blocks(const nlohmann::json& blocks) {
  if (!blocks.is_array()) throw InputError("blocks must be an array");
  std::vector<std::vector<std::int64_t>> parts;  // empty vector marks H
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (b.is_string() && b.get<std::string>() == "H") {
      parts.emplace_back();
      n += 2;
    } else if (b.is_number_integer()) {
      parts.push_back({b.get<std::int64_t>()});
      n += 1;
    } else {
      throw InputError("block entries must be \"H\" or an integer");
    }
  }
  IntMatrix g(n, n);
  std::size_t at = 0;
  for (const auto& p : parts) {
    if (p.empty()) {
      g(at, at + 1) = g(at + 1, at) = 1;
      at += 2;
    } else {
      g(at, at) = p.front();
      at += 1;
    }
  }
  return g;
}

}  // namespace

IntLattice lattice_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw InputError("lattice literal must be an object");
    const bool has_gram = j.contains("gram"), has_blocks = j.contains("blocks");
    if (has_gram == has_blocks) throw InputError("lattice literal needs exactly one of gram or blocks");
    IntMatrix gram = has_gram ? matrix_from_json(j.at("gram")) : gram_from_blocks(j.at("blocks"));
    if (!gram.is_square()) throw InputError("gram matrix must be square");
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = j.at("labels").get<std::vector<std::string>>();
    } else {
      for (std::size_t i = 0; i < gram.rows(); ++i) labels.push_back("b" + std::to_string(i + 1));
    }
    if (labels.size() != gram.rows()) throw InputError("label count does not match gram size");
    const bool unimodular = j.value("unimodular", false);
    IntLattice l(j.value("name", std::string("L")), std::move(labels), std::move(gram),
                 unimodular ? Unimodular::kRequired : Unimodular::kUnchecked);
    if (j.contains("alternate")) {
      const auto& alt = j.at("alternate");
      l = l.with_alternate_basis({alt.at("labels").get<std::vector<std::string>>(), matrix_from_json(alt.at("vectors"))});
    }
    return l;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed lattice literal: ") + e.what());
  }
}

nlohmann::json to_json(const SignatureParity& sp) {
  return {{"signature", sp.signature}, {"parity", sp.parity == Parity::kEven ? "even" : "odd"}};
}

nlohmann::json to_json(const SurfaceClass& s) {
  return {{"label", s.label}, {"class", s.klass.coords}, {"genus", s.genus}, {"square", s.square}};
}

}  // namespace fourcalc::lattice
