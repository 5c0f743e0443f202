#include "slnrect/cli.hpp"

#include "slnrect/errors.hpp"
#include "slnrect/rectifier.hpp"
#include "slnrect/sl2bridge.hpp"
#include "slnrect/textio.hpp"

namespace slnrect {

namespace {

template <class F>
CommandResult guarded(F&& body) {
  CommandResult r;
  try {
    body(r);
  } catch (const Error& e) {
    r.code = exit_code_for(e.kind());
    r.out.clear();
    r.aux.clear();
    r.err += std::string(e.what()) + "\n";
    if (!e.detail().empty() && e.kind() != ErrorKind::parse_error) r.err += e.detail() + "\n";
  } catch (const std::exception& e) {
    r.code = exit_internal;
    r.out.clear();
    r.aux.clear();
    r.err += std::string("internal error: ") + e.what() + "\n";
  }
  return r;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse_error: return exit_parse;
    case ErrorKind::not_an_embedding: return exit_not_embedding;
    case ErrorKind::search_exhausted:
    case ErrorKind::resource_exceeded:
    case ErrorKind::heuristic_failed:
    case ErrorKind::divisibility_fails:
    case ErrorKind::division_obstruction: return exit_search;
    case ErrorKind::unsupported_size: return exit_unsupported;
    case ErrorKind::replay_mismatch: return exit_replay;
    default: return exit_internal;
  }
}

CommandResult cmd_verify(std::string_view curve_text, const RunConfig& cfg) {
  return guarded([&](CommandResult& r) {
    SlCurve c = parse_curve(curve_text);
    EmbeddingReport rep = is_embedding(c, cfg.groebner());
    r.out = rep.to_string() + "\n";
    r.code = rep.is_embedding ? exit_ok : exit_not_embedding;
  });
}

CommandResult cmd_rectify(std::string_view curve_text, const RunConfig& cfg) {
  return guarded([&](CommandResult& r) {
    SlCurve c = parse_curve(curve_text);
    if (c.n() == 2) {
      std::vector<UniPoly> col = c.column(0);
      const bool embeds = embedding_report(col, cfg.groebner()).is_embedding;
      throw Error(ErrorKind::unsupported_size,
                  embeds ? "SL2 curves are not rectified here; the first column embeds, so the conditional "
                           "SL2 path (plane straightening) applies"
                         : "SL2 curves are not rectified here; the first column does not embed, so no "
                           "algebraic rectification is available",
                  "2");
    }
    r.out = format_certificate(rectify(c, cfg));
  });
}

CommandResult cmd_equiv(std::string_view f_text, std::string_view g_text, const RunConfig& cfg) {
  return guarded([&](CommandResult& r) {
    SlCurve f = parse_curve(f_text);
    SlCurve g = parse_curve(g_text);
    if (f.n() != g.n()) throw ParseError(2, 1, "curves have different sizes");
    AutWord w = equivalence(f, g, cfg);
    if (apply_word(w, f) != g) throw Error(ErrorKind::replay_mismatch, "equivalence word does not carry f to g");
    r.out = format_word(w);
  });
}

CommandResult cmd_apply(std::string_view word_text, std::string_view curve_text) {
  return guarded([&](CommandResult& r) {
    AutWord w = parse_word(word_text);
    SlCurve c = parse_curve(curve_text);
    if (w.n() != c.n()) throw ParseError(2, 1, "word and curve have different sizes");
    r.out = format_curve(apply_word(w, c));
  });
}

CommandResult cmd_verify_cert(std::string_view cert_text, const RunConfig& cfg) {
  return guarded([&](CommandResult& r) {
    Certificate cert = parse_certificate(cert_text);
    for (const auto& check : verify_certificate(cert, cfg.groebner())) r.out += "ok " + check + "\n";
    r.out += "certificate verified\n";
  });
}

CommandResult cmd_lift3(std::string_view triple_text, const RunConfig& cfg, bool normalize) {
  return guarded([&](CommandResult& r) {
    C3Triple tr = parse_triple(triple_text);
    if (normalize) {
      DivisibilityResult d = attempt_divisibility(tr, cfg.seed, cfg.max_trials, cfg.groebner());
      r.aux = format_c3_word(d.word);
      tr = d.triple;
    }
    SlCurve c = lift_c3_to_sl2(tr);
    r.err = is_embedding(c, cfg.groebner()).to_string() + "\n";
    r.out = format_curve(c);
  });
}

}  // namespace slnrect
