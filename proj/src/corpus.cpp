#include "cgc/corpus.hpp"

namespace cgc {

const std::vector<NamedProgram> &while_corpus() {
  static const std::vector<NamedProgram> corpus = {
      {"skip", "skip"},
      {"rand", "x := rand"},
      {"incr", "x := 1; x := x + 1"},
      {"count-up", "x := 0; while x < 10 do { x := x + 1 }"},
      {"count-down", "vars x, y; x := 5; y := 0; while 0 < x do { x := x - 1; y := y + 2 }"},
      {"abs", "x := rand; if x < 0 then { y := 0 - x } else { y := x }"},
      {"sign-branch", "x := rand; if x < 0 then { y := 0 - 1 } else { if x = 0 then { y := 0 } "
                      "else { y := 1 } }"},
      {"div-by-rand", "x := 6; y := rand; z := x / y"},
      {"div-zero", "x := 1; y := 0; z := x / y; x := 2"},
      {"div-loop", "x := 64; n := 0; while 1 < x do { x := x / 2; n := n + 1 }"},
      {"nested", "i := 0; s := 0; while i < 3 do { j := 0; while j < 2 do { s := s + i * j; "
                 "j := j + 1 }; i := i + 1 }"},
      {"nested-down", "i := 3; while 0 < i do { j := i; while 0 < j do { j := j - 1 }; i := i - 1 }"},
      {"mul-signs", "x := rand; y := rand; z := x * y"},
      {"square", "x := rand; y := x * x"},
      {"swap", "x := rand; y := 2; t := x; x := y; y := t"},
      {"guard-and", "x := rand; y := rand; if 0 < x && 0 < y then { z := x + y } else { z := 0 }"},
      {"guard-or", "x := rand; if x < 0 || x = 0 then { x := 1 } else { skip }"},
      {"never", "x := 1; while false do { x := 0 - 1 }"},
      {"once", "x := 0; if true then { x := x + 1 } else { x := x - 1 }"},
      {"rand-loop", "x := rand; while x < 0 do { x := x + 1 }"},
      {"collatz-ish", "x := 6; while 1 < x do { if x / 2 * 2 = x then { x := x / 2 } else "
                      "{ x := 3 * x + 1 } }"},
      {"sum", "vars i, n, s; n := 4; i := 0; s := 0; while i < n do { i := i + 1; s := s + i }"},
      {"neg-accum", "x := 0; y := 3; while 0 < y do { x := x - y; y := y - 1 }"},
      {"grouped", "{ x := 1; y := 2 }; z := x - y"},
      {"div-neg", "x := 0 - 7; y := 2; q := x / y; r := x - q * y"},
      {"rand-guard", "x := 0; while rand < 1 && x < 3 do { x := x + 1 }"},
      {"nested-div", "a := 100; while 0 < a do { b := a; while 9 < b do { b := b / 10 }; "
                     "a := a / 3 - 10 }"},
      {"comment", "# leading comment\nx := 2; # trailing\ny := x * -1"},
  };
  return corpus;
}

} // namespace cgc
