#include "cellcover/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cellcover/abelian.hpp"
#include "cellcover/cech.hpp"
#include "cellcover/covers.hpp"
#include "cellcover/cxc.hpp"
#include "cellcover/error.hpp"
#include "cellcover/pi1.hpp"
#include "cellcover/torsion.hpp"

namespace cellcover {

namespace {

/// Bad flag value or unreadable input: exit status 2.
struct UsageError {
  std::string message;
};

/// Domain error raised while reading a named input file.
struct FileError {
  std::string path;
  Error error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{path + ": cannot open file"};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

template <class F>
auto load(const std::string& path, F&& parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const Error& e) {
    throw FileError{path, e};
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

/// Parses a word given on the command line. Syntax problems are usage
/// errors; unknown generators stay domain errors.
Word flag_word(const std::string& flag, const std::string& text,
               const std::vector<std::string>& names) {
  try {
    return parse_word(text, names);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SyntaxError) throw UsageError{flag + ": " + e.detail()};
    throw;
  }
}

/// "x: w1 ; y: w2" into generator-name -> word text.
std::map<std::string, std::string> parse_assignments(const std::string& flag,
                                                     const std::string& text) {
  std::map<std::string, std::string> out;
  for (const std::string& part : split(text, ';')) {
    if (trim(part).empty()) continue;
    const auto colon = part.find(':');
    if (colon == std::string::npos) throw UsageError{flag + ": expected <gen>:<value> in '" + part + "'"};
    const std::string key = trim(part.substr(0, colon));
    if (!is_identifier(key)) throw UsageError{flag + ": '" + key + "' is not an identifier"};
    if (!out.emplace(key, trim(part.substr(colon + 1))).second) {
      throw UsageError{flag + ": '" + key + "' assigned twice"};
    }
  }
  return out;
}

std::size_t generator_index(const std::vector<std::string>& names, const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + name + "'");
  return static_cast<std::size_t>(it - names.begin());
}

struct SubgroupFlags {
  std::string subgroup;
  std::string monodromy;
  std::size_t budget = default_coset_budget;
  bool has_subgroup = false;
  bool has_monodromy = false;

  void attach(CLI::App* app) {
    auto* s = app->add_option("--subgroup", subgroup, "comma-separated generator words");
    auto* m = app->add_option("--monodromy", monodromy, "e.g. a:(2 1 3);b:(1 3 2)");
    s->excludes(m);
    app->add_option("--budget", budget, "coset enumeration budget")->capture_default_str();
    app->final_callback([this, s, m] {
      has_subgroup = s->count() > 0;
      has_monodromy = m->count() > 0;
    });
  }

  CosetTable table(const Presentation& p) const {
    if (!has_subgroup && !has_monodromy) {
      throw UsageError{"one of --subgroup or --monodromy is required"};
    }
    if (has_subgroup) {
      SubgroupWords s;
      for (const std::string& w : split(subgroup, ',')) {
        s.words.push_back(flag_word("--subgroup", w, p.generators));
      }
      return enumerate_cosets(p, s, budget);
    }
    const auto assigned = parse_assignments("--monodromy", monodromy);
    std::vector<std::optional<Permutation>> images(p.generators.size());
    for (const auto& [name, perm] : assigned) {
      const std::size_t g = generator_index(p.generators, name);
      try {
        images[g] = parse_image_list(perm);
      } catch (const Error& e) {
        throw UsageError{"--monodromy: " + e.detail()};
      }
    }
    MonodromyHom hom;
    for (std::size_t g = 0; g < images.size(); ++g) {
      if (!images[g]) {
        throw Error(ErrorCode::InvalidMonodromy, "no permutation for generator '" + p.generators[g] + "'");
      }
      hom.images.push_back(*images[g]);
    }
    return enumerate_cosets(p, hom, budget);
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string format_labels(const CellComplex& nerve, const FiniteGroup& g, const Cocycle& c) {
  std::string out;
  for (std::size_t e = 0; e < nerve.edge_count(); ++e) {
    if (e) out += ' ';
    out += nerve.edge(e).name + "=g" + std::to_string(c.value(g, pos(e)));
  }
  return out;
}

CellComplex load_complex(const std::string& path) {
  return load(path, [](const std::string& t) { return parse_cxc(t); });
}

struct Options {
  std::vector<std::string> files;
  SubgroupFlags sub;
  std::string path;
  std::size_t start = 1;
  std::vector<std::string> maps;
  std::string source;
  std::string group;
  std::string against;
  std::string base;
  bool pointed = false;
  bool matrix = false;
  std::size_t cap = ClassifyOptions{}.max_labelings;
  long long rank = -1;
  std::string m;
};

int dispatch(const std::string& cmd, Options& o, std::ostream& out) {
  if (cmd == "euler") {
    out << euler_characteristic(load_complex(o.files.at(0))) << '\n';
  } else if (cmd == "components") {
    const CellComplex c = load_complex(o.files.at(0));
    const ComponentPartition parts = connected_components(c);
    out << "components: " << parts.count << '\n';
    for (std::size_t k = 0; k < parts.count; ++k) {
      out << "component " << k + 1 << ':';
      for (std::size_t v = 0; v < c.vertex_count(); ++v) {
        if (parts.vertex[v] == k) out << ' ' << c.vertex(v).name;
      }
      out << '\n';
    }
  } else if (cmd == "pi1") {
    const CellComplex c = load_complex(o.files.at(0));
    if (o.base.empty()) {
      out << format_presentation(presentation(c)) << '\n';
    } else {
      const auto v = c.find(CellKind::vertex, o.base);
      if (!v) throw Error(ErrorCode::UnknownVertex, "no vertex '" + o.base + "'");
      out << format_presentation(presentation(c, v->index)) << '\n';
    }
  } else if (cmd == "abelianize") {
    if (o.matrix) {
      out << format_abelian(smith_form(load(o.files.at(0), [](const std::string& t) {
        return parse_matrix(t);
      }))) << '\n';
    } else {
      out << format_abelian(abelianization(presentation(load_complex(o.files.at(0))))) << '\n';
    }
  } else if (cmd == "cover") {
    const CellComplex c = load_complex(o.files.at(0));
    out << emit_cxc(build_cover(c, o.sub.table(presentation(c))));
  } else if (cmd == "deck") {
    const CellComplex c = load_complex(o.files.at(0));
    const DeckGroup d = deck_group(o.sub.table(presentation(c)));
    out << "order: " << d.order() << '\n'
        << "regular: " << yes_no(d.regular) << '\n'
        << "cyclic: " << yes_no(d.is_cyclic()) << '\n'
        << "abelian: " << yes_no(d.is_commutative()) << '\n';
    for (std::size_t i = 0; i < d.elements.size(); ++i) {
      out << "element " << i + 1 << ": " << format_image_list(d.elements[i]) << '\n';
    }
  } else if (cmd == "lift") {
    const CellComplex c = load_complex(o.files.at(0));
    const CoveringComplex cov = build_cover(c, o.sub.table(presentation(c)));
    const Word w = flag_word("--path", o.path, c.edge_names());
    if (o.start < 1) throw UsageError{"--start: fiber points are numbered from 1"};
    const TracedPath lifted = lift_path(cov, w, o.start - 1);
    out << "lift: " << format_word(lifted.word, cov.total.edge_names()) << '\n'
        << "end: " << cov.total.vertex(lifted.end).name << '\n'
        << "sheet: " << cov.sheet(vertex_id(lifted.end)) + 1 << '\n';
  } else if (cmd == "liftcheck") {
    const CellComplex c = load_complex(o.files.at(0));
    const Presentation p = presentation(c);
    const CosetTable t = o.sub.table(p);
    const Presentation src = o.source.empty() ? p : presentation(load_complex(o.source));
    if (o.maps.size() != 1) throw UsageError{"liftcheck takes exactly one --map"};
    const auto assigned = parse_assignments("--map", o.maps[0]);
    std::vector<Word> images;
    for (const std::string& g : src.generators) {
      auto it = assigned.find(g);
      if (it == assigned.end()) {
        throw Error(ErrorCode::UnmappedGenerator, "--map gives no image for '" + g + "'");
      }
      images.push_back(flag_word("--map", it->second, p.generators));
    }
    for (const auto& [name, value] : assigned) (void)generator_index(src.generators, name);
    out << (lifting_criterion(t, images, src.relators) ? "YES" : "NO") << '\n';
  } else if (cmd == "vankampen") {
    if (o.files.size() != 3) throw UsageError{"vankampen needs three complexes: U V W"};
    if (o.maps.size() != 2) throw UsageError{"vankampen needs two --map flags (W->U, W->V)"};
    const Presentation p1 = presentation(load_complex(o.files[0]));
    const Presentation p2 = presentation(load_complex(o.files[1]));
    const Presentation p0 = presentation(load_complex(o.files[2]));
    auto leg = [&](const std::string& text, const Presentation& target) {
      GeneratorMap m;
      for (const auto& [name, value] : parse_assignments("--map", text)) {
        m[generator_index(p0.generators, name)] = flag_word("--map", value, target.generators);
      }
      return m;
    };
    out << format_presentation(van_kampen_pushout(p1, p2, p0, leg(o.maps[0], p1), leg(o.maps[1], p2)))
        << '\n';
  } else if (cmd == "cech-classify" || cmd == "cech-check") {
    if (o.group.empty()) throw UsageError{"--group is required"};
    const FiniteGroup g = load(o.group, [](const std::string& t) { return parse_group_table(t); });
    const CellComplex nerve = load(o.files.at(0), [](const std::string& t) {
      return nerve_complex(parse_nerve(t));
    });
    if (cmd == "cech-classify") {
      const auto classes = classify(nerve, g, {o.cap, o.pointed});
      out << "classes: " << classes.size() << '\n';
      for (std::size_t i = 0; i < classes.size(); ++i) {
        out << "class " << i + 1 << ": " << format_labels(nerve, g, classes[i]) << '\n';
      }
    } else {
      if (o.files.size() != 2) throw UsageError{"cech-check needs a nerve and a cocycle file"};
      const Cocycle c = load(o.files[1], [&](const std::string& t) { return parse_cocycle(t, nerve, g); });
      const bool valid = validate_cocycle(nerve, g, c);
      out << "valid: " << yes_no(valid) << '\n';
      if (valid) {
        const Presentation p = presentation(nerve);
        const auto hom = cocycle_to_hom(nerve, g, c);
        out << "holonomy:";
        for (std::size_t i = 0; i < hom.size(); ++i) out << ' ' << p.generators[i] << "=g" << hom[i];
        out << '\n';
        if (!o.against.empty()) {
          const Cocycle other =
              load(o.against, [&](const std::string& t) { return parse_cocycle(t, nerve, g); });
          if (!validate_cocycle(nerve, g, other)) {
            throw FileError{o.against, Error(ErrorCode::InvalidArgument, "not a cocycle")};
          }
          out << "cohomologous: " << yes_no(cohomologous(nerve, g, c, other)) << '\n';
        }
      }
    }
  } else if (cmd == "torsion") {
    Integer m;
    try {
      m = Integer(o.m);
    } catch (const std::exception&) {
      throw UsageError{"--m: '" + o.m + "' is not an integer"};
    }
    FgAbelian pi1;
    if (!o.files.empty()) {
      if (o.rank >= 0) throw UsageError{"give either a complex or --rank, not both"};
      pi1 = abelianization(presentation(load_complex(o.files[0])));
    } else if (o.rank >= 0) {
      pi1.rank = static_cast<std::size_t>(o.rank);
    } else {
      throw UsageError{"torsion needs --rank or a complex"};
    }
    const FgAbelian t = torsion_points(pi1, m);
    out << "structure: " << format_abelian(t) << '\n'
        << "order: " << mult_by_m_degree(pi1, m) << '\n';
  }
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial covering spaces of 2-complexes", "cellcover"};
  app.require_subcommand(1);
  Options o;

  auto file_cmd = [&](const std::string& name, const std::string& desc, int files = 1) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("files", o.files, "input files")->required()->expected(files);
    return sub;
  };

  file_cmd("euler", "Euler characteristic");
  file_cmd("components", "connected components");
  file_cmd("pi1", "presentation of the fundamental group")
      ->add_option("--base", o.base, "basepoint vertex");
  file_cmd("abelianize", "abelianization (or Smith form with --matrix)")
      ->add_flag("--matrix", o.matrix, "input is an integer matrix");
  o.sub.attach(file_cmd("cover", "covering complex of a subgroup"));
  o.sub.attach(file_cmd("deck", "deck transformation group"));
  CLI::App* lift = file_cmd("lift", "lift an edge path");
  o.sub.attach(lift);
  lift->add_option("--path", o.path, "edge word from the basepoint")->required();
  lift->add_option("--start", o.start, "fiber point (1-based)")->capture_default_str();
  CLI::App* liftcheck = file_cmd("liftcheck", "lifting criterion for a map into the base");
  o.sub.attach(liftcheck);
  liftcheck->add_option("--map", o.maps, "generator images, e.g. \"a: a a\"")->required();
  liftcheck->add_option("--source", o.source, "source complex (default: the base itself)");
  file_cmd("vankampen", "pushout of U <- W -> V", 3)
      ->add_option("--map", o.maps, "W->U then W->V generator images")
      ->required();
  CLI::App* classify_cmd = file_cmd("cech-classify", "classes of Cech 1-cocycles");
  classify_cmd->add_option("--group", o.group, "group table file")->required();
  classify_cmd->add_flag("--pointed", o.pointed, "no conjugation at the base patch");
  classify_cmd->add_option("--budget", o.cap, "maximum number of labelings")->capture_default_str();
  CLI::App* check = file_cmd("cech-check", "validate a cocycle file", 2);
  check->add_option("--group", o.group, "group table file")->required();
  check->add_option("--against", o.against, "second cocycle to compare");
  CLI::App* torsion = app.add_subcommand("torsion", "m-torsion points pi1 / m pi1");
  torsion->add_option("files", o.files, "complex whose pi1 is used")->expected(0, 1);
  torsion->add_option("--rank", o.rank, "rank of a free abelian pi1");
  torsion->add_option("--m", o.m, "m")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "usage: " << msg << '\n';
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cmd, o, out);
  } catch (const UsageError& e) {
    err << "usage: " << e.message << '\n';
    return 2;
  } catch (const FileError& e) {
    err << "error: " << e.path;
    if (e.error.position()) err << ':' << *e.error.position();
    err << ": " << to_string(e.error.code()) << ": " << e.error.detail() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace cellcover
