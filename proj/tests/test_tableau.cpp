#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "affcells/scalar.hpp"
#include "affcells/tableau.hpp"

using namespace affcells;

TEST(Tableau, WorkedExampleSeventeen) {
  const ParabolicTableau tab({17, {1, 5, 9, 11}});
  EXPECT_EQ(tab.lambda(), (std::vector<int>{1, 4, 4, 2, 6}));
  EXPECT_EQ(tab.nu(), Partition({5, 4, 3, 3, 1, 1}));
  EXPECT_EQ(tab.red(), (std::vector<int>{1, 2, 3, 4, 12, 13}));
  EXPECT_EQ(tab.m_seq(), (std::vector<int>{14, 15, 16, 17, 10, 11, 6, 7, 8, 9, 5}));
  EXPECT_EQ(tab.s1(), (std::vector<int>{1, 3, 4, 5, 16, 17}));
  EXPECT_EQ(tab.f(1, 4), 10);
  EXPECT_EQ(tab.f(4, 3), 15);
  EXPECT_EQ(tab.f(6, 1), 17);
  EXPECT_EQ(dim_g_mod_p(tab), 108);
  EXPECT_EQ(tab.r(), 5);
  EXPECT_EQ(tab.s(), 6);
}

TEST(Tableau, SmallExamples) {
  const ParabolicTableau two({2, {1}});
  EXPECT_EQ(two.nu(), Partition({2}));
  EXPECT_EQ(two.s(), 1);
  EXPECT_EQ(two.f(1, 1), 1);
  EXPECT_EQ(two.f(1, 2), 2);
  EXPECT_EQ(two.red(), std::vector<int>{1});
  EXPECT_EQ(two.m_seq(), std::vector<int>{2});
  EXPECT_EQ(dim_g_mod_p(two), 1);

  const ParabolicTableau three({3, {1, 2}});
  EXPECT_EQ(three.nu(), Partition({3}));
  EXPECT_EQ(three.m_seq(), (std::vector<int>{3, 2}));
  EXPECT_EQ(three.iota(2), 1);
  EXPECT_EQ(three.iota(3), 2);
  EXPECT_EQ(dim_g_mod_p(three), 3);
  EXPECT_THROW(three.iota(1), DomainError);

  const ParabolicTableau five({5, {3}});
  EXPECT_EQ(five.nu(), Partition({2, 2, 1}));
}

TEST(Tableau, WholeGroup) {
  const ParabolicTableau tab({4, {}});
  EXPECT_EQ(tab.nu(), Partition({1, 1, 1, 1}));
  EXPECT_EQ(tab.s(), 4);
  EXPECT_TRUE(tab.blue().empty());
  EXPECT_EQ(dim_g_mod_p(tab), 0);
}

TEST(Tableau, RejectsBadDescriptors) {
  EXPECT_THROW(ParabolicTableau({5, {3, 3}}), DomainError);
  EXPECT_THROW(ParabolicTableau({5, {0}}), DomainError);
  EXPECT_THROW(ParabolicTableau({5, {5}}), DomainError);
  EXPECT_THROW(ParabolicTableau({5, {3, 2}}), DomainError);
}

TEST(Tableau, IntervalFormulaForRedAgreesWhenReadAsEmptyInterval) {
  // Row 2 is shorter than row 1, so the upper end falls below the lower end.
  EXPECT_FALSE(ParabolicTableau({5, {3}}).red_closed_form_differs());
  for (int n = 1; n <= 8; ++n)
    for (const auto& desc : ParabolicDescriptor::all_for(n))
      EXPECT_FALSE(ParabolicTableau(desc).red_closed_form_differs()) << to_string(desc);
}

TEST(TableauProperty, ExhaustiveInvariants) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& desc : ParabolicDescriptor::all_for(n)) {
      const ParabolicTableau tab(desc);
      SCOPED_TRACE(to_string(desc));
      EXPECT_EQ(tab.nu(), conjugate(partition_from_unsorted(tab.lambda())));

      std::int64_t squares = 0;
      std::int64_t weighted = 0;
      for (int l : tab.lambda()) squares += l * l;
      for (int i = 1; i <= tab.s(); ++i) weighted += (2 * i - 1) * tab.nu().part(i);
      EXPECT_EQ(squares, weighted);

      std::set<int> seen;
      for (int i = 1; i <= tab.s(); ++i)
        for (int j = 1; j <= tab.nu().part(i); ++j) {
          const int x = tab.f(i, j);
          EXPECT_TRUE(seen.insert(x).second);
          EXPECT_EQ(tab.position(x), std::make_pair(i, j));
        }
      EXPECT_EQ(seen.size(), static_cast<std::size_t>(n));

      for (int k = 1; k <= tab.r(); ++k) {
        EXPECT_EQ(tab.red_of_row(k).size(), tab.s1_of_row(k).size());
        EXPECT_EQ(tab.blue_of_row(k).size(), tab.s2_of_row(k).size());
        for (int x : tab.red_of_row(k))
          for (int y : tab.blue_of_row(k)) EXPECT_LT(x, y);
      }
      EXPECT_TRUE(std::is_sorted(tab.l_seq().begin(), tab.l_seq().end()));
      for (int i = 1; i <= tab.s(); ++i) EXPECT_EQ(tab.row_of(tab.f(i, 1)), tab.row_of(tab.l(i)));

      auto m = tab.m_seq();
      auto t = tab.t_seq();
      std::sort(m.begin(), m.end());
      std::sort(t.begin(), t.end());
      EXPECT_EQ(m, tab.blue());
      EXPECT_EQ(t, tab.s2());
      for (std::size_t i = 0; i < tab.m_seq().size(); ++i)
        EXPECT_EQ(tab.row_of(tab.m_seq()[i]), tab.row_of(tab.t_seq()[i]));

      std::set<int> iota_image;
      std::set<int> non_bottom;
      for (int x : tab.s2()) iota_image.insert(tab.iota(x));
      for (int i = 1; i <= tab.s(); ++i)
        for (int j = 1; j < tab.nu().part(i); ++j) non_bottom.insert(tab.f(i, j));
      EXPECT_EQ(iota_image, non_bottom);
      EXPECT_EQ(iota_image.size(), tab.s2().size());
    }
  }
}

TEST(TableauProperty, DescriptorCount) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(ParabolicDescriptor::all_for(n).size(), std::size_t{1} << (n - 1));
}
