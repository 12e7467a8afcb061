#include "germ/render.hpp"

#include <sstream>

#include "germ/parser.hpp"

namespace germ {

namespace {

nlohmann::json field_json(const ReportField& field) {
  if (field.has_value()) {
    return field.value();
  }
  if (field.is_infinite()) {
    return "infinity";
  }
  return "unknown";
}

void add_field(nlohmann::json& out, nlohmann::json& reasons, const std::string& name,
               const ReportField& field) {
  out[name] = field_json(field);
  if (field.is_unknown() && !field.reason().empty()) {
    reasons[name] = field.reason();
  }
}

std::string field_text(const ReportField& field) {
  if (field.has_value()) {
    return std::to_string(field.value());
  }
  if (field.is_infinite()) {
    return "infinity";
  }
  return field.reason().empty() ? "unknown" : "unknown (" + field.reason() + ")";
}

std::string hf_text(const std::vector<std::uint64_t>& hf) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < hf.size(); ++i) {
    if (i > 0) {
      out << ", ";
    }
    out << hf[i];
  }
  out << "]";
  return out.str();
}

} // namespace

nlohmann::json report_to_json(const SingularityReport& report) {
  nlohmann::json out;
  nlohmann::json reasons = nlohmann::json::object();
  out["f"] = print_polynomial(report.f);
  add_field(out, reasons, "s", report.s);
  add_field(out, reasons, "s_prime", report.s_prime);
  add_field(out, reasons, "mu", report.mu);
  add_field(out, reasons, "tau", report.tau);
  add_field(out, reasons, "right_det", report.right_det);
  add_field(out, reasons, "contact_det", report.contact_det);
  add_field(out, reasons, "min_k_right", report.min_k_right);
  add_field(out, reasons, "min_k_contact", report.min_k_contact);
  add_field(out, reasons, "cor_bound_right", report.cor_bound_right);
  add_field(out, reasons, "cor_bound_contact", report.cor_bound_contact);
  if (report.hf_tjurina.has_value()) {
    out["hf_tjurina"] = *report.hf_tjurina;
  }
  if (!reasons.empty()) {
    out["reasons"] = reasons;
  }
  if (!report.notes.empty()) {
    out["notes"] = report.notes;
  }
  return out;
}

std::string report_to_text(const SingularityReport& report) {
  std::ostringstream out;
  out << "f                : " << print_polynomial(report.f) << "\n";
  out << "ord f (s)        : " << field_text(report.s) << "\n";
  out << "ord j(f) (s')    : " << field_text(report.s_prime) << "\n";
  out << "milnor number    : " << field_text(report.mu) << "\n";
  out << "tjurina number   : " << field_text(report.tau) << "\n";
  out << "right det bound  : " << field_text(report.right_det) << "\n";
  out << "contact det bound: " << field_text(report.contact_det) << "\n";
  out << "min k (right)    : " << field_text(report.min_k_right) << "\n";
  out << "min k (contact)  : " << field_text(report.min_k_contact) << "\n";
  out << "cor bound right  : " << field_text(report.cor_bound_right) << "\n";
  out << "cor bound contact: " << field_text(report.cor_bound_contact) << "\n";
  if (report.hf_tjurina.has_value()) {
    out << "hilbert (tjurina): " << hf_text(*report.hf_tjurina) << "\n";
  }
  for (const auto& note : report.notes) {
    out << "note: " << note << "\n";
  }
  return out.str();
}

nlohmann::json verdict_to_json(const EquivalenceVerdict& verdict, const Polynomial& f,
                               const Polynomial& g) {
  nlohmann::json out;
  out["mode"] = to_string(verdict.mode);
  out["verdict"] = to_string(verdict.kind);
  out["f"] = print_polynomial(f);
  out["g"] = print_polynomial(g);
  out["cap"] = verdict.cap;
  out["characteristic"] = verdict.characteristic;
  if (verdict.certificate.has_value()) {
    nlohmann::json cert;
    cert["kind"] = to_string(*verdict.certificate);
    if (verdict.certificate_k.has_value()) {
      cert["k"] = *verdict.certificate_k;
    }
    if (verdict.certificate_bound.has_value()) {
      cert["bound"] = *verdict.certificate_bound;
    }
    out["certificate"] = cert;
  }
  if (verdict.witness.has_value()) {
    nlohmann::json witness;
    witness["invariant"] = *verdict.witness;
    if (verdict.witness_k.has_value()) {
      witness["k"] = *verdict.witness_k;
    }
    witness["f"] = verdict.witness_f.value_or("");
    witness["g"] = verdict.witness_g.value_or("");
    out["witness"] = witness;
  }
  nlohmann::json evidence = nlohmann::json::array();
  for (const auto& item : verdict.evidence) {
    nlohmann::json entry;
    entry["check"] = item.check;
    if (item.k.has_value()) {
      entry["k"] = *item.k;
    }
    entry["ok"] = item.ok;
    if (!item.detail.empty()) {
      entry["detail"] = item.detail;
    }
    evidence.push_back(entry);
  }
  out["evidence"] = evidence;
  return out;
}

std::string verdict_to_text(const EquivalenceVerdict& verdict, const Polynomial& f,
                            const Polynomial& g) {
  std::ostringstream out;
  out << "mode   : " << to_string(verdict.mode) << "\n";
  out << "f      : " << print_polynomial(f) << "\n";
  out << "g      : " << print_polynomial(g) << "\n";
  out << "verdict: " << to_string(verdict.kind) << "\n";
  if (verdict.certificate.has_value()) {
    out << "certificate: " << to_string(*verdict.certificate);
    if (verdict.certificate_k.has_value()) {
      out << " (k = " << *verdict.certificate_k << ")";
    }
    if (verdict.certificate_bound.has_value()) {
      out << " (bound = " << *verdict.certificate_bound << ")";
    }
    out << "\n";
  }
  if (verdict.witness.has_value()) {
    out << "witness: " << *verdict.witness;
    if (verdict.witness_k.has_value()) {
      out << " at k = " << *verdict.witness_k;
    }
    out << ": f gives " << verdict.witness_f.value_or("") << ", g gives "
        << verdict.witness_g.value_or("") << "\n";
  }
  for (const auto& item : verdict.evidence) {
    out << "  [" << (item.ok ? "ok" : "fail") << "] " << item.check;
    if (item.k.has_value()) {
      out << " (k = " << *item.k << ")";
    }
    if (!item.detail.empty()) {
      out << ": " << item.detail;
    }
    out << "\n";
  }
  return out.str();
}

} // namespace germ
