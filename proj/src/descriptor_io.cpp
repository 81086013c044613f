#include "virmod/descriptor_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace virmod {

ModuleInstance InstanceSpec::plain() const {
  if (twisted())
    throw ConfigError("twisted descriptor used where a plain instance is needed");
  return {desc, std::get<Rat>(mode)};
}

TwistedInstance InstanceSpec::twisted_inst() const {
  if (!twisted())
    // a plain instance is the constant twist
    return {desc, LaurentPoly::constant(std::get<Rat>(mode))};
  return {desc, std::get<LaurentPoly>(mode)};
}

namespace {

Rat json_rat(const Json& j, const std::string& where) {
  if (j.is_string()) return rat_parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw ParseError("expected a rational (\"p/q\" string) at " + where);
}

CoeffDescriptor parse_descriptor(const Json& j) {
  if (!j.contains("family") || !j["family"].is_string())
    throw ParseError("descriptor needs a \"family\" field");
  std::string fam = j["family"].get<std::string>();
  const Json params = j.value("parameters", Json::object());
  if (fam == "onedim") {
    if (!params.contains("b")) throw ParseError("onedim needs parameter b");
    return CoeffDescriptor(OneDimDesc{json_rat(params["b"], "b")});
  }
  if (fam == "gamma") {
    for (const char* k : {"alpha1", "lambda1", "lambda2"})
      if (!params.contains(k))
        throw ParseError(std::string("gamma needs parameter ") + k);
    return CoeffDescriptor(GammaDesc{json_rat(params["alpha1"], "alpha1"),
                                     json_rat(params["lambda1"], "lambda1"),
                                     json_rat(params["lambda2"], "lambda2")});
  }
  if (fam == "qlambda") {
    if (!params.contains("r") || !params["r"].is_number_integer())
      throw ParseError("qlambda needs an integer parameter r");
    QLambdaDesc q;
    q.r = params["r"].get<int>();
    if (!params.contains("S") || !params["S"].is_array())
      throw ParseError("qlambda needs an integer array S");
    for (const auto& e : params["S"]) q.S.insert(e.get<int>());
    if (params.contains("lambda")) {
      for (const auto& [k, v] : params["lambda"].items())
        q.lambda[std::stoi(k)] = json_rat(v, "lambda." + k);
    }
    return CoeffDescriptor(std::move(q));
  }
  throw ParseError("unknown family '" + fam + "'");
}

}  // namespace

InstanceSpec parse_instance_spec(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("descriptor is not valid JSON: ") + e.what());
  }
  CoeffDescriptor desc = parse_descriptor(j);
  auto violations = validate_descriptor(desc);
  if (!violations.empty()) {
    std::string msg = "descriptor violates its conditions:";
    for (const auto& v : violations) msg += "\n  - " + v;
    throw ConfigError(msg);
  }
  if (!j.contains("mode")) return {desc, Rat(0)};
  const Json& m = j["mode"];
  if (m.contains("plain")) return {desc, json_rat(m["plain"], "mode.plain")};
  if (m.contains("twisted")) {
    LaurentPoly beta;
    for (const auto& [k, v] : m["twisted"].items())
      beta.add_term(std::stol(k), json_rat(v, "mode.twisted." + k));
    return {desc, beta};
  }
  throw ParseError("mode must contain \"plain\" or \"twisted\"");
}

InstanceSpec load_instance_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open descriptor file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance_spec(ss.str());
}

Json canonical_json(const InstanceSpec& spec) {
  Json j;
  Json params = Json::object();
  switch (spec.desc.family()) {
    case Family::OneDim:
      j["family"] = "onedim";
      params["b"] = rat_str(spec.desc.onedim().b);
      break;
    case Family::Gamma: {
      const auto& g = spec.desc.gamma();
      j["family"] = "gamma";
      params["alpha1"] = rat_str(g.alpha1);
      params["lambda1"] = rat_str(g.lambda1);
      params["lambda2"] = rat_str(g.lambda2);
      break;
    }
    case Family::QLambda: {
      const auto& q = spec.desc.qlambda();
      j["family"] = "qlambda";
      params["r"] = q.r;
      Json s = Json::array();
      for (int i : q.S) s.push_back(i);
      params["S"] = s;
      Json lam = Json::object();
      for (const auto& [i, c] : q.lambda) lam[std::to_string(i)] = rat_str(c);
      params["lambda"] = lam;
      break;
    }
  }
  j["parameters"] = params;
  Json mode = Json::object();
  if (spec.twisted()) {
    Json b = Json::object();
    for (const auto& [k, c] : std::get<LaurentPoly>(spec.mode).terms())
      b[std::to_string(k)] = rat_str(c);
    mode["twisted"] = b;
  } else {
    mode["plain"] = rat_str(std::get<Rat>(spec.mode));
  }
  j["mode"] = mode;
  return j;
}

std::string describe(const InstanceSpec& spec) {
  std::ostringstream os;
  os << "family " << family_name(spec.desc.family()) << ", rank "
     << spec.desc.rank();
  switch (spec.desc.family()) {
    case Family::OneDim:
      os << ", b = " << rat_str(spec.desc.onedim().b);
      break;
    case Family::Gamma: {
      const auto& g = spec.desc.gamma();
      os << " (effective), alpha1 = " << rat_str(g.alpha1)
         << ", lambda1 = " << rat_str(g.lambda1)
         << ", lambda2 = " << rat_str(g.lambda2);
      if (g.lambda2 == 0 && g.lambda1 != 0)
        os << "\nnote: lambda2 = 0, treated at rank 1 so the top generator "
              "stays injective";
      break;
    }
    case Family::QLambda: {
      const auto& q = spec.desc.qlambda();
      os << ", S = {";
      bool first = true;
      for (int i : q.S) {
        if (!first) os << ",";
        first = false;
        os << i;
      }
      os << "}, lambda = {";
      first = true;
      for (const auto& [i, c] : q.lambda) {
        if (!first) os << ", ";
        first = false;
        os << i << ": " << rat_str(c);
      }
      os << "}";
      break;
    }
  }
  if (spec.twisted())
    os << "\nmode twisted, beta = " << std::get<LaurentPoly>(spec.mode).str();
  else
    os << "\nmode plain, alpha = " << rat_str(std::get<Rat>(spec.mode));
  os << "\nconditions: valid";
  os << "\ncanonical: " << canonical_json(spec).dump();
  return os.str();
}

OperatorSpec parse_operator(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "c") return {OperatorSpec::Kind::C};
  auto args_of = [&](std::size_t open) {
    if (s.back() != ')') throw ParseError("bad operator literal '" + text + "'");
    std::string body = s.substr(open + 1, s.size() - open - 2);
    std::vector<long> args;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        args.push_back(std::stol(tok));
      } catch (...) {
        throw ParseError("bad operator argument '" + tok + "'");
      }
    }
    return args;
  };
  if (s.rfind("d(", 0) == 0) {
    auto a = args_of(1);
    if (a.size() != 1) throw ParseError("d takes one argument");
    return {OperatorSpec::Kind::D, a[0]};
  }
  if (s.rfind("t(", 0) == 0) {
    auto a = args_of(1);
    if (a.size() != 1) throw ParseError("t takes one argument");
    return {OperatorSpec::Kind::T, a[0]};
  }
  if (s.rfind("omega(", 0) == 0) {
    auto a = args_of(5);
    if (a.size() != 3 || a[2] < 0)
      throw ParseError("omega takes (l, m, s) with s >= 0");
    return {OperatorSpec::Kind::Omega, a[0], a[1], static_cast<unsigned>(a[2])};
  }
  throw ParseError("unknown operator '" + text + "'");
}

WeightVector apply_operator(const InstanceSpec& inst, const OperatorSpec& op,
                            const WeightVector& w) {
  switch (op.kind) {
    case OperatorSpec::Kind::C:
      return c_act(w);
    case OperatorSpec::Kind::T:
      return t_act(op.a, w);
    case OperatorSpec::Kind::D:
      if (inst.twisted()) {
        TwistedInstance ti = inst.twisted_inst();
        return twisted_d_act(ti, op.a, w);
      } else {
        ModuleInstance mi = inst.plain();
        return d_act(mi, op.a, w);
      }
    case OperatorSpec::Kind::Omega: {
      OmegaSpec spec{op.a, op.b, op.s};
      if (inst.twisted()) {
        TwistedInstance ti = inst.twisted_inst();
        return omega_apply(spec, w, twisted_action(ti));
      } else {
        ModuleInstance mi = inst.plain();
        return omega_apply(spec, w, plain_action(mi));
      }
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

AVector parse_component(const CoeffDescriptor& desc, const std::string& text) {
  switch (desc.family()) {
    case Family::OneDim:
      return AVector::onedim(rat_parse(text));
    case Family::Gamma:
      return AVector::gamma(poly_parse(text));
    case Family::QLambda: {
      // sum of terms "coef*[i,j,...]" or bare "[i,j]"
      std::map<Monomial, Rat> terms;
      std::size_t i = 0;
      auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
          ++i;
      };
      bool any = false;
      while (true) {
        skip_ws();
        if (i >= text.size()) break;
        int sign = 1;
        while (i < text.size() && (text[i] == '+' || text[i] == '-')) {
          if (text[i] == '-') sign = -sign;
          ++i;
          skip_ws();
        }
        Rat coef(1);
        std::size_t start = i;
        while (i < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[i])) ||
                text[i] == '/'))
          ++i;
        if (i > start) coef = rat_parse(text.substr(start, i - start));
        skip_ws();
        if (i < text.size() && text[i] == '*') {
          ++i;
          skip_ws();
        }
        Monomial m;
        if (i < text.size() && text[i] == '[') {
          std::size_t close = text.find(']', i);
          if (close == std::string::npos)
            throw ParseError("unclosed monomial bracket in '" + text + "'");
          std::string body = text.substr(i + 1, close - i - 1);
          std::stringstream ss(body);
          std::string tok;
          while (std::getline(ss, tok, ','))
            if (!tok.empty()) m.push_back(std::stoi(tok));
          std::sort(m.begin(), m.end());
          i = close + 1;
        } else if (i == start) {
          throw ParseError("expected a qlambda term at position " +
                           std::to_string(i) + " in '" + text + "'");
        }
        auto it = terms.find(m);
        Rat add = sign * coef;
        if (it == terms.end())
          terms.emplace(std::move(m), add);
        else
          it->second += add;
        any = true;
      }
      if (!any) throw ParseError("empty qlambda component");
      return AVector::qlambda(std::move(terms));
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

WeightVector parse_weight_vector(const CoeffDescriptor& desc,
                                 const std::string& text) {
  WeightVector w(desc.family());
  std::stringstream ss(text);
  std::string part;
  bool any = false;
  while (std::getline(ss, part, ';')) {
    std::size_t at = part.rfind('@');
    if (at == std::string::npos)
      throw ParseError("vector component needs 'component @ grade': '" + part +
                       "'");
    std::string comp = part.substr(0, at);
    std::string grade_s = part.substr(at + 1);
    long grade;
    try {
      grade = std::stol(grade_s);
    } catch (...) {
      throw ParseError("bad grade '" + grade_s + "'");
    }
    w.add(grade, parse_component(desc, comp));
    any = true;
  }
  if (!any) throw ParseError("empty vector literal");
  return w;
}

}  // namespace virmod
