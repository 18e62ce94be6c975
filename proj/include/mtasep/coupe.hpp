#pragma once

#include <vector>

#include "mtasep/chain.hpp"

namespace mtasep {

/// A maximal segment of a three-species circular word: a (possibly empty)
/// run of 3's followed by a nonempty run of 1's or of 2's. Sites run from
/// `start` for `length` positions, modulo N.
struct Coupe {
  int start = 0;
  int length = 0;
  int front = 0;  ///< leftmost 1 or 2
  int back = 0;   ///< rightmost letter
  int cls = 0;    ///< 1 for first-class, 2 for second-class
  bool full = false;  ///< no 3's

  std::vector<int> sites(int ring) const;
};

/// Cuts after every 2 not followed by a 2 and every 1 not followed by a 1,
/// circularly. Coupes are ordered by starting site.
std::vector<Coupe> decompose_coupes(const Word& w);

/// Seat statistics of a queue's coupes.
struct CoupeCounts {
  int first_class = 0;         ///< c_1
  int second_class = 0;        ///< c_2
  int full_first = 0;          ///< f_1
  int full_second = 0;         ///< f_2
  int occupied_back_first = 0; ///< o_1
  int vacant_back_first = 0;   ///< v_1
  int vacant_back_second = 0;  ///< v_2

  int nonfull_second() const { return second_class - full_second; }  ///< e_2
  int expected_outgoing() const { return first_class + nonfull_second(); }
  int expected_incoming_regular() const { return occupied_back_first; }
  int expected_incoming_pulling() const {
    return vacant_back_first + vacant_back_second - full_second;
  }
};

CoupeCounts coupe_counts(const MultilineQueue& q, const std::vector<Coupe>& coupes);

/// The jump applied by the front seat of `coupes[index]`; returns the queue
/// unchanged when that seat cannot jump (full second-class coupe).
struct CoupeJump {
  MultilineQueue target;
  Mechanism mechanism = Mechanism::CoupeRegular;
  int site = 0;
  int jumper_class = 0;
};
std::optional<CoupeJump> coupe_jump(const MultilineQueue& q, const std::vector<Coupe>& coupes,
                                    std::size_t index);

/// Multiline coupe process (three species): one regular or pulling jump per
/// coupe whose front seat can move, rate x_1 for a 1 and x_2 for a 2.
QueueChain build_coupe_chain(const Composition& c);

}  // namespace mtasep
