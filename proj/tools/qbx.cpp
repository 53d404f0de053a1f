#include <qbicross/qbicross.h>

#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

namespace {

struct Options {
  std::string format = "text";
  std::string presentation = "affine_new";
  int degree = 3;
  std::uint64_t seed = 1;
};

// Usage and input errors exit 2; everything else that goes wrong exits 1.
int exitCode(qbx_status s) {
  switch (s) {
  case QBX_OK: return 0;
  case QBX_ERR_PARSE:
  case QBX_ERR_LOOKUP:
  case QBX_ERR_DOMAIN:
  case QBX_ERR_ARGUMENT: return 2;
  default: return 1;
  }
}

int report(qbx_status s, char* const& out) {
  if (s != QBX_OK) {
    std::cerr << "error: " << qbx_status_name(s) << ": " << qbx_last_error() << "\n";
    return exitCode(s);
  }
  std::cout << out << "\n";
  qbx_string_free(out);
  return 0;
}

qbx_format formatOf(const Options& o) { return o.format == "json" ? QBX_JSON : QBX_TEXT; }

// Runs f with the presentation opened; returns the exit code.
int withAlgebra(const Options& o, const std::function<int(qbx_algebra*)>& f) {
  qbx_algebra* alg = nullptr;
  const qbx_status s = qbx_algebra_open(o.presentation.c_str(), &alg);
  if (s != QBX_OK)
    return report(s, nullptr);
  const int code = f(alg);
  qbx_algebra_close(alg);
  return code;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with the affine quantum group as a central extension"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--presentation", o.presentation, "Builtin presentation name or JSON file");
  app.add_option("--degree", o.degree, "Degree bound for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for sampled checks");
  app.set_version_flag("--version", std::string(qbx_version()));

  std::function<int()> run;
  std::string expr, left, right;
  int iterate = 1;
  bool inverse = false;

  auto* norm = app.add_subcommand("norm", "Normal form of an expression");
  norm->add_option("expr", expr)->required();
  norm->callback([&] {
    run = [&] {
      return withAlgebra(o, [&](qbx_algebra* a) {
        char* out = nullptr;
        return report(qbx_normalize(a, expr.c_str(), formatOf(o), &out), out);
      });
    };
  });

  auto* mul = app.add_subcommand("mul", "Product of two expressions");
  mul->add_option("--left", left)->required();
  mul->add_option("--right", right)->required();
  mul->callback([&] {
    run = [&] {
      return withAlgebra(o, [&](qbx_algebra* a) {
        char* out = nullptr;
        return report(qbx_multiply(a, left.c_str(), right.c_str(), formatOf(o), &out), out);
      });
    };
  });

  auto* coprod = app.add_subcommand("coprod", "Coproduct");
  coprod->add_option("expr", expr)->required();
  coprod->add_option("--iterate", iterate, "Apply the coproduct this many times")->check(CLI::PositiveNumber);
  coprod->callback([&] {
    run = [&] {
      return withAlgebra(o, [&](qbx_algebra* a) {
        char* out = nullptr;
        return report(qbx_coproduct(a, expr.c_str(), iterate, formatOf(o), &out), out);
      });
    };
  });

  auto* counit = app.add_subcommand("counit", "Counit");
  counit->add_option("expr", expr)->required();
  counit->callback([&] {
    run = [&] {
      return withAlgebra(o, [&](qbx_algebra* a) {
        char* out = nullptr;
        return report(qbx_counit(a, expr.c_str(), formatOf(o), &out), out);
      });
    };
  });

  auto* antipode = app.add_subcommand("antipode", "Antipode");
  antipode->add_option("expr", expr)->required();
  antipode->callback([&] {
    run = [&] {
      return withAlgebra(o, [&](qbx_algebra* a) {
        char* out = nullptr;
        return report(qbx_antipode(a, expr.c_str(), formatOf(o), &out), out);
      });
    };
  });

  auto* jmap = app.add_subcommand("jmap", "Section j of a loop expression");
  jmap->add_option("expr", expr)->required();
  jmap->callback([&] {
    run = [&] {
      char* out = nullptr;
      return report(qbx_jmap(expr.c_str(), formatOf(o), &out), out);
    };
  });

  auto* beta = app.add_subcommand("beta", "Coaction of a loop expression");
  beta->add_option("expr", expr)->required();
  beta->callback([&] {
    run = [&] {
      char* out = nullptr;
      return report(qbx_beta(expr.c_str(), formatOf(o), &out), out);
    };
  });

  auto* cocycle = app.add_subcommand("cocycle", "Cocycle on two loop expressions");
  cocycle->add_option("--left", left)->required();
  cocycle->add_option("--right", right)->required();
  cocycle->add_flag("--inverse", inverse, "Convolution inverse of the cocycle");
  cocycle->callback([&] {
    run = [&] {
      char* out = nullptr;
      return report(qbx_cocycle(left.c_str(), right.c_str(), inverse ? 1 : 0, formatOf(o), &out), out);
    };
  });

  auto* extmul = app.add_subcommand("extmul", "Product in the extension (affine_new expressions)");
  extmul->add_option("--left", left)->required();
  extmul->add_option("--right", right)->required();
  extmul->callback([&] {
    run = [&] {
      char* out = nullptr;
      return report(qbx_ext_multiply(left.c_str(), right.c_str(), formatOf(o), &out), out);
    };
  });

  auto* extcoprod = app.add_subcommand("extcoprod", "Coproduct in the extension (affine_new expression)");
  extcoprod->add_option("expr", expr)->required();
  extcoprod->callback([&] {
    run = [&] {
      char* out = nullptr;
      return report(qbx_ext_coproduct(expr.c_str(), formatOf(o), &out), out);
    };
  });

  std::string check;
  auto* verify = app.add_subcommand("verify", "Exhaustive identity sweeps");
  verify->add_option("check", check)->required()->check(CLI::IsMember({"hopf", "cocycle", "ext", "iso", "confluence"}));
  verify->add_option("--degree", o.degree, "Degree bound")->check(CLI::PositiveNumber);
  verify->callback([&] {
    run = [&] {
      return withAlgebra(o, [&](qbx_algebra* a) {
        char* out = nullptr;
        int passed = 0;
        const int code = report(qbx_verify(a, check.c_str(), o.degree, o.seed, formatOf(o), &out, &passed), out);
        return code != 0 ? code : (passed ? 0 : 1);
      });
    };
  });

  int minus = 1, plus = 1, depth = 12;
  std::string labels, method = "direct", order = "minus-plus";
  auto* rcalc = app.add_subcommand("rcalc", "R-matrix token calculus");
  rcalc->require_subcommand(1);
  auto* rcCocycle = rcalc->add_subcommand("cocycle", "Cocycle on sign-pure words of matrix generators");
  rcCocycle->add_option("--minus", minus, "Number of minus tokens")->check(CLI::NonNegativeNumber);
  rcCocycle->add_option("--plus", plus, "Number of plus tokens")->check(CLI::NonNegativeNumber);
  rcCocycle->add_option("--labels", labels, "Comma separated spectral labels by slot");
  rcCocycle->add_option("--method", method)->check(CLI::IsMember({"direct", "closed"}));
  rcCocycle->add_option("--order", order, "Which word is the left argument")
      ->check(CLI::IsMember({"minus-plus", "plus-minus"}));
  rcCocycle->add_option("--depth", depth, "Search depth of the direct method")->check(CLI::PositiveNumber);
  rcCocycle->callback([&] {
    run = [&] {
      char* out = nullptr;
      return report(qbx_rcalc_cocycle(minus, plus, order == "plus-minus" ? 1 : 0,
                                      labels.empty() ? nullptr : labels.c_str(),
                                      method == "direct" ? QBX_RC_DIRECT : QBX_RC_CLOSED, depth, formatOf(o), &out),
                    out);
    };
  });

  std::string exportName;
  auto* presentation = app.add_subcommand("presentation", "Presentation data");
  presentation->require_subcommand(1);
  auto* exportCmd = presentation->add_subcommand("export", "Print a presentation as JSON");
  exportCmd->add_option("name", exportName)->required();
  exportCmd->callback([&] {
    run = [&] {
      o.presentation = exportName;
      return withAlgebra(o, [&](qbx_algebra* a) {
        char* out = nullptr;
        return report(qbx_presentation_export(a, &out), out);
      });
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return run ? run() : 2;
}
