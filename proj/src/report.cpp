#include "ore/report.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>

#include "ore/structure.hpp"

namespace ore {

namespace {

constexpr const char* kSchema = "ore-report/1";

Json texts(const std::vector<RingElement>& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(to_text(e));
  return out;
}

Json texts(const std::vector<OrePoly>& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(to_text(e));
  return out;
}

Json certificate(const Certificate& c) {
  Json out;
  out["holds"] = c.holds;
  out["within_caps"] = c.within_caps;
  if (!c.holds) {
    out["violated"] = c.violated;
    out["tuple"] = texts(c.tuple);
  }
  return out;
}

Json certificate(const PolyCertificate& c) {
  Json out;
  out["holds"] = c.holds;
  out["within_caps"] = c.within_caps;
  if (!c.holds) {
    out["violated"] = c.violated;
    out["tuple"] = texts(c.tuple);
  }
  return out;
}

Json verdict(const Verdict& v) {
  Json out;
  out["property"] = v.property;
  out["outcome"] = to_string(v.outcome);
  out["criterion"] = v.criterion;
  out["caps"] = v.caps.to_string();
  if (!v.ideal.empty()) out["ideal"] = texts(v.ideal);
  if (!v.polys.empty()) out["polys"] = texts(v.polys);
  if (v.outcome == Outcome::fails_with_witness) out["witness_validated"] = v.witness_validated;
  if (!v.cross_checks.empty()) out["cross_checks"] = v.cross_checks;
  if (!v.notes.empty()) out["notes"] = v.notes;
  return out;
}

Json shape(const ShapeCheck& s) {
  Json out;
  out["holds"] = s.holds;
  if (!s.reason.empty()) out["reason"] = s.reason;
  if (s.c) out["c"] = to_text(*s.c);
  Json terms = Json::array();
  for (const auto& [e, b] : s.terms) {
    Json t;
    t["exponent"] = e;
    t["coefficient"] = to_text(b);
    terms.push_back(t);
  }
  out["terms"] = terms;
  out["operator_identity"] = certificate(s.operator_identity);
  return out;
}

Json flags(const OreRing& h) {
  Json out;
  out["sigma_identity"] = to_string(h.sigma_identity());
  out["sigma_endomorphism"] = to_string(h.sigma_endomorphism());
  out["delta_zero"] = to_string(h.delta_zero());
  out["delta_sigma_derivation"] = to_string(h.delta_sigma_derivation());
  out["kernel_right_linear"] = to_string(h.kernel_right_linear());
  out["kernel_left_linear"] = to_string(h.kernel_left_linear());
  return out;
}

Json run_task(const TaskSpec& t, const OreHandle& h, const CapProfile& caps, std::uint64_t seed) {
  Json out;
  out["caps"] = caps.to_string();
  switch (t.kind) {
    case TaskKind::mul: {
      const OrePoly& a = t.input("left").front();
      const OrePoly& b = t.input("right").front();
      out["left"] = to_text(a);
      out["right"] = to_text(b);
      out["product"] = to_text(a * b);
      break;
    }
    case TaskKind::divide: {
      const OrePoly& a = t.input("dividend").front();
      const OrePoly& b = t.input("divisor").front();
      const Division d = euclid_divide(a, b);
      out["dividend"] = to_text(a);
      out["divisor"] = to_text(b);
      out["quotient"] = to_text(d.quotient);
      out["remainder"] = to_text(d.remainder);
      out["verified"] = d.quotient * b + d.remainder == a && degree(d.remainder) < degree(b);
      break;
    }
    case TaskKind::right_coeffs: {
      const OrePoly& f = t.input("poly").front();
      const auto c = to_right_coeffs(f);
      out["poly"] = to_text(f);
      out["coefficients"] = texts(c);
      out["right_form"] = to_right_text(f);
      out["round_trip"] = from_right_coeffs(h, c) == f;
      break;
    }
    case TaskKind::axioms: {
      const AxiomReport r = axiom_suite(h, caps, seed);
      out["seed"] = seed;
      Json checks = Json::array();
      for (const auto& c : r.checks) {
        Json e = {{"name", c.name}};
        e.update(certificate(c.result));
        checks.push_back(e);
      }
      out["checks"] = checks;
      out["ore_extension"] = r.ore_extension();
      out["strong"] = r.strong();
      out["constants"] = texts(r.constants);
      break;
    }
    case TaskKind::associativity: {
      const AssociativityVerdict v = associativity_verdict(h, caps);
      out["associative"] = v.associative;
      out["coefficients"] = certificate(v.coefficients);
      out["sigma_endomorphism"] = certificate(v.sigma_endomorphism);
      out["delta_derivation"] = certificate(v.delta_derivation);
      out["exhaustive"] = certificate(v.exhaustive);
      out["routes_agree"] = v.routes_agree;
      break;
    }
    case TaskKind::center: {
      out["basis"] = texts(center_basis(h, caps));
      const Verdict m = minimal_monic_central(h, caps);
      out["minimal_monic"] = verdict(m);
      const unsigned p = h->ring().field.characteristic();
      if (p != 0 && !m.polys.empty() && degree(m.polys.front()) > Degree(0)) {
        out["shape"] = shape(char_p_shape_check(m.polys.front(), p, caps));
      }
      out["field_check"] = verdict(center_field_check(h, caps));
      break;
    }
    case TaskKind::ideal: {
      const IdealBasis b = ideal_saturate(h, t.input("generators"), caps);
      out["generators"] = texts(t.input("generators"));
      out["basis"] = texts(b.basis);
      out["closure"] = to_string(b.closure);
      out["rounds_used"] = b.rounds_used;
      out["discarded"] = b.discarded;
      out["contains_one"] = b.contains_one();
      out["generator"] = verdict(minimal_monic_generator(b));
      break;
    }
    case TaskKind::delta_simple:
      out["verdict"] = verdict(delta_simplicity_probe(h, caps));
      break;
    case TaskKind::simplicity:
      out["verdict"] = verdict(simplicity_verdict(h, caps));
      break;
    case TaskKind::dynamics_report: {
      const DynamicsReport d = dynamics_report(h, caps);
      out["verdict"] = verdict(d.simplicity);
      out["center"] = texts(d.center);
      out["minimal"] = d.minimal;
      out["discrete_minimal_discrepancy"] = d.discrete_minimal_discrepancy;
      out["note"] = d.note;
      break;
    }
  }
  return out;
}

void render_text(const Json& j, const std::string& indent, std::string& out) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out += indent + key + ":\n";
      render_text(value, indent + "  ", out);
    } else if (value.is_array()) {
      if (value.empty()) {
        out += indent + key + ": none\n";
        continue;
      }
      out += indent + key + ":\n";
      for (const auto& e : value) {
        if (e.is_object()) {
          out += indent + "  -\n";
          render_text(e, indent + "    ", out);
        } else {
          out += indent + "  - " + (e.is_string() ? e.get<std::string>() : e.dump()) + "\n";
        }
      }
    } else {
      out += indent + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    }
  }
}

}  // namespace

int Report::exit_status() const {
  for (const auto& t : tasks) {
    if (!t.ok) return 1;
  }
  return 0;
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

Report run(const RingSpecFile& spec, const RunOptions& options) {
  const CapProfile caps = options.caps.value_or(spec.caps);
  caps.validate();
  Report r;
  r.header["ring"] = spec.ring.to_string();
  r.header["sigma"] = spec.sigma;
  r.header["delta"] = spec.delta;
  r.header["caps"] = caps.to_string();
  r.header["flags"] = flags(*spec.handle);

  Json tasks = Json::array();
  for (const auto& t : spec.tasks) {
    TaskResult res;
    res.kind = t.kind;
    const auto start = std::chrono::steady_clock::now();
    try {
      res.result = run_task(t, spec.handle, caps, options.seed);
    } catch (const Error& e) {
      res.ok = false;
      res.error = e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Json entry;
    entry["kind"] = to_string(t.kind);
    entry["status"] = res.ok ? "ok" : "error";
    if (res.ok) {
      entry["result"] = res.result;
    } else {
      entry["error"] = res.error;
    }
    tasks.push_back(entry);
    r.tasks.push_back(std::move(res));
  }

  r.payload["schema"] = kSchema;
  r.payload.update(r.header);
  r.payload["tasks"] = tasks;
  r.hash = sha256_hex(r.payload.dump());
  return r;
}

std::string render_report(const Report& report, ReportFormat format) {
  if (format == ReportFormat::structured) {
    Json doc = report.payload;
    doc["hash"] = report.hash;
    return doc.dump(2) + "\n";
  }
  std::string out = "schema: " + std::string(kSchema) + "\n";
  render_text(report.header, "", out);
  const Json& tasks = report.payload["tasks"];
  for (std::size_t i = 0; i < report.tasks.size(); ++i) {
    const auto& t = report.tasks[i];
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3f", t.seconds);
    out += "\ntask " + std::to_string(i + 1) + ": " + to_string(t.kind) + " [" + (t.ok ? "ok" : "error") + ", " + secs +
           " s]\n";
    if (t.ok) {
      render_text(tasks[i]["result"], "  ", out);
    } else {
      out += "  error: " + t.error + "\n";
    }
  }
  out += "\nhash: " + report.hash + "\n";
  return out;
}

}  // namespace ore
