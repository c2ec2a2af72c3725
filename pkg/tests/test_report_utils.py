import unittest

import pandas as pd

from brauer_lab.experiments import SUITES, CheckResult
from brauer_lab.report_utils import (MULTIPLICITY_COLUMNS, RESULT_COLUMNS, multiplicity_frame, render_partition,
                                     results_frame, suites_frame, summarize, write_multiplicity_csv)


class TestMultiplicityFrame(unittest.TestCase):
    def test_fourth_power_of_sp4(self):
        df = multiplicity_frame(4, 2)
        self.assertEqual(list(df.columns), MULTIPLICITY_COLUMNS)
        self.assertEqual(int(df["product"].sum()), 256)
        row = df[df["lambda"] == "[2,2]"].iloc[0]
        self.assertEqual((row["mult"], row["dim"]), (2, 14))

    def test_render_partition(self):
        self.assertEqual(render_partition((3, 1)), "[3,1]")
        self.assertEqual(render_partition(()), "[]")


def test_write_multiplicity_csv(tmp_path):
    path = tmp_path / "mult.csv"
    write_multiplicity_csv(str(path), 3, 1)
    df = pd.read_csv(path)
    assert list(df.columns) == MULTIPLICITY_COLUMNS
    assert dict(zip(df["lambda"], df["mult"])) == {"[3]": 1, "[1]": 2}


def _results():
    return [
        CheckResult("ideal", {"m": 1, "n": 2, "f": 1, "field": "q"}, 1, "DERIVED", 1, True, millis=3),
        CheckResult("presentation", {"m": 1, "n": 2, "field": "q"}, {"diagram": 4}, "THEOREM", {"diagram": 3},
                    False, millis=5),
        CheckResult("endomorphism", {"m": 1, "n": 2, "f": 1}, 9, "DERIVED", {"q": 8}, False, asserted=False),
    ]


def test_results_frame_flattens_nested_values():
    df = results_frame(_results())
    assert list(df.columns) == RESULT_COLUMNS
    assert df.loc[1, "expected"] == '{"diagram":4}'
    assert df.loc[0, "params"] == '{"f":1,"field":"q","m":1,"n":2}'
    assert df["asserted"].tolist() == [True, True, False]


def test_results_frame_accepts_dicts():
    df = results_frame([r.to_dict() for r in _results()])
    assert len(df) == 3


def test_summarize_counts_only_asserted_rows():
    assert summarize(results_frame(_results())) == {"passed": 1, "failed": 1}
    assert summarize(results_frame([])) == {"passed": 0, "failed": 0}


def test_suites_frame():
    df = suites_frame(SUITES)
    assert len(df) == len(SUITES)
    row = df[df["suite"] == "bookkeeping"].iloc[0]
    assert row["checks"] == "bookkeeping,layers"
    assert not df[df["suite"] == "endomorphism"].iloc[0]["asserted"]


if __name__ == "__main__":
    unittest.main()
