#pragma once

#include <string>
#include <vector>

namespace gadtmap::test {

/// A worked example with its published analysis. Constraint lists use the
/// published call labels; `f1` stands for the single root function.
struct ReferenceExample {
  std::string name;
  std::string file;
  std::string term;
  std::string spec;
  bool int_literals = false;
  std::string form;
  int free_count = 0;
  std::size_t calls = 0;
  std::vector<std::string> constraints;
  std::string annotated;
  std::vector<std::string> essential;
};

inline const std::vector<ReferenceExample>& reference_examples() {
  static const std::vector<ReferenceExample> examples = {
      {"seq",
       "seq.gadt",
       "pair (pair (const tt) (const 2)) (const 5)",
       "Seq b1",
       true,
       "(f'1 * f'2) * f'3",
       3,
       5,
       {"<g1^1, f1>", "<h1^1 * h2^1, g1^1>", "<g1^2.1, h1^1>", "<h1^2.1 * h2^2.1, g1^2.1>", "<g1^2.2, h2^1>",
        "<g1^2.1.1, h1^2.1>", "<g1^2.1.2, h2^2.1>"},
       "*pair (*pair (*const tt) (*const 2)) (*const 5)",
       {"pair", "pair", "const", "const", "const"}},
      {"projpair",
       "g.gadt",
       "projpair (inj (inj (cons 2 nil), pairing (inj 2) const))",
       "G b1",
       false,
       "f'1 * id@Nat",
       1,
       7,
       {"<g1^1, f1>", "<h1^1 * h2^1, g1^1>", "<G g1^2 * G (g2^2 * g2^2), G h1^1 * G (h2^1 * h2^1)>",
        "<G g1^3, G g1^2>", "<G (g2^3 * g2^3), G (g2^2 * g2^2)>", "<g1^4.1, g1^3>",
        "<g1^4.2 * g1^4.2, g2^3 * g2^3>", "<g1^4.2.1, g1^4.2>", "<g1^4.2.2, g1^4.2>", "<id@Nat, g1^4.2.2>"},
       "*projpair (*inj *(*inj (cons 2 nil), *pairing (*inj 2) *const))",
       {"projpair", "inj", "inj", "pairing", "inj", "const"}},
      {"flat",
       "g.gadt",
       "projpair (inj (flat (cons const nil), pairing (inj 2) const))",
       "G b1",
       false,
       "List (id@Nat) * id@Nat",
       0,
       10,
       {"<g1^1, f1>", "<h1^1 * h2^1, g1^1>", "<G g1^2 * G (g2^2 * g2^2), G h1^1 * G (h2^1 * h2^1)>",
        "<G g1^3, G g1^2>", "<G (g2^3 * g2^3), G (g2^2 * g2^2)>", "<g1^4.1, g1^3>", "<List h1^4.1, g1^4.1>",
        "<G g1^4.1.1, G h1^4.1>", "<g1^4.1.1.1, g1^4.1.1>", "<id@Nat, g1^4.1.1.1>",
        "<G g1^4.1.1.2, G g1^4.1.1>", "<g1^4.2 * g1^4.2, g2^3 * g2^3>", "<g1^4.2.1, g1^4.2>",
        "<g1^4.2.2, g1^4.2>", "<id@Nat, g1^4.2.2>"},
       "*projpair (*inj *(*flat (*cons *const *nil), *pairing (*inj 2) *const))",
       {"projpair", "inj", "flat", "cons", "const", "nil", "pairing", "inj", "const"}},
      {"list-shallow",
       "g.gadt",
       "cons (cons 1 (cons 2 nil)) (cons (cons 3 nil) nil)",
       "List b1",
       false,
       "f'1",
       1,
       3,
       {"<g1^1, f1>", "<g1^2, g1^1>", "<g1^2.1, g1^2>"},
       "*cons (cons 1 (cons 2 nil)) (*cons (cons 3 nil) *nil)",
       {"cons", "cons", "nil"}},
      {"list-deep",
       "g.gadt",
       "cons (cons 1 (cons 2 nil)) (cons (cons 3 nil) nil)",
       "List (List b1)",
       false,
       "List f'1",
       1,
       8,
       {"<List g1^1, f1>", "<g1^2.1, g1^1>", "<List g1^2.2, List g1^1>", "<g1^2.1.1, g1^2.1>",
        "<g1^2.2.1, g1^2.2>", "<List g1^2.2.2, List g1^2.2>", "<g1^2.1.1.1, g1^2.1.1>",
        "<g1^2.2.1.1, g1^2.2.1>"},
       "*cons (*cons 1 (*cons 2 *nil)) (*cons (*cons 3 *nil) *nil)",
       {"cons", "cons", "cons", "nil", "cons", "cons", "nil", "nil"}},
  };
  return examples;
}

}  // namespace gadtmap::test
