#include "supersylow/algebra_io.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>

namespace supersylow {

namespace {

using ojson = nlohmann::ordered_json;

ojson mat_to_json(const Mat& m) {
  ojson rows = ojson::array();
  for (int i = 0; i < m.rows; ++i) {
    ojson row = ojson::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(rat_to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Rat parse_rat(const std::string& s) {
  auto r = rat_from_string(s);
  if (!r) throw std::runtime_error("algebra_from_json: bad rational '" + s + "'");
  return *r;
}

Mat mat_from_json(const ojson& j) {
  const int rows = static_cast<int>(j.size());
  const int cols = rows ? static_cast<int>(j.at(0).size()) : 0;
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) m.at(i, c) = parse_rat(j.at(i).at(c).get<std::string>());
  return m;
}

}  // namespace

std::string algebra_to_json(const SuperAlgebra& a, int indent) {
  ojson j;
  j["dim_even"] = a.dim_even;
  j["dim_odd"] = a.dim_odd;
  j["names"] = a.names;
  ojson brackets = ojson::array();
  for (int i = 0; i < a.dim(); ++i)
    for (int jj = i; jj < a.dim(); ++jj) {
      if (a.table[i][jj].empty()) continue;
      ojson terms = ojson::array();
      for (const auto& [k, c] : a.table[i][jj]) terms.push_back(ojson{k, rat_to_string(c)});
      brackets.push_back(ojson{i, jj, std::move(terms)});
    }
  j["brackets"] = std::move(brackets);
  if (a.realization) {
    ojson r;
    r["p"] = a.realization->p;
    r["q"] = a.realization->q;
    ojson mats = ojson::array();
    for (const Mat& m : a.realization->mats) mats.push_back(mat_to_json(m));
    r["mats"] = std::move(mats);
    ojson ci = ojson::array();
    for (const Mat& m : a.realization->central_ideal) ci.push_back(mat_to_json(m));
    r["central_ideal"] = std::move(ci);
    j["realization"] = std::move(r);
  } else {
    j["realization"] = nullptr;
  }
  return j.dump(indent) + "\n";
}

SuperAlgebra algebra_from_json(const std::string& text) {
  ojson j = ojson::parse(text);
  SuperAlgebra a;
  a.dim_even = j.at("dim_even").get<int>();
  a.dim_odd = j.at("dim_odd").get<int>();
  a.names = j.at("names").get<std::vector<std::string>>();
  if (static_cast<int>(a.names.size()) != a.dim())
    throw std::runtime_error("algebra_from_json: names length mismatch");
  a.init_table();
  for (const auto& entry : j.at("brackets")) {
    const int i = entry.at(0).get<int>();
    const int jj = entry.at(1).get<int>();
    if (i < 0 || jj < i || jj >= a.dim())
      throw std::runtime_error("algebra_from_json: bad bracket index");
    Vec v(a.dim(), Rat(0));
    for (const auto& term : entry.at(2))
      v[term.at(0).get<int>()] = parse_rat(term.at(1).get<std::string>());
    a.set_bracket(i, jj, v);
    // fill the lower half from super-antisymmetry
    const bool both_odd = a.odd_index(i) && a.odd_index(jj);
    if (i != jj) a.set_bracket(jj, i, vec_scale(both_odd ? rat(1) : rat(-1), v));
  }
  if (!j.at("realization").is_null()) {
    const auto& r = j.at("realization");
    Realization real;
    real.p = r.at("p").get<int>();
    real.q = r.at("q").get<int>();
    for (const auto& m : r.at("mats")) real.mats.push_back(mat_from_json(m));
    for (const auto& m : r.at("central_ideal")) real.central_ideal.push_back(mat_from_json(m));
    a.realization = std::move(real);
  }
  return a;
}

void save_algebra(const SuperAlgebra& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_algebra: cannot open " + path);
  out << algebra_to_json(a);
}

SuperAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_algebra: cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return algebra_from_json(text);
}

}  // namespace supersylow
