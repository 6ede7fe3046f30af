#!/usr/bin/env python3
"""Convert raw UCI downloads into the tables the manifests expect.

Reads the files fetch_uci.sh drops into data/raw and writes one table per
dataset with the same file names, column names and delimiters as the bundled
synthetic tables, so the manifests run on the real data after nothing more
than a `path` edit. Conversion is per dataset and best-effort: a missing or
unrecognizable raw file skips that dataset and fails the exit code, but never
blocks the others.
"""

import argparse
import csv
import io
import sys
import zipfile
from pathlib import Path

ADULT = ["age", "workclass", "fnlwgt", "education", "education-num", "marital-status",
         "occupation", "relationship", "race", "sex", "capital-gain", "capital-loss",
         "hours-per-week", "native-country", "income"]

AUSTRALIAN = [f"A{i}" for i in range(1, 16)]

BCW = ["id", "clump_thickness", "uniformity_cell_size", "uniformity_cell_shape",
       "marginal_adhesion", "single_epithelial_cell_size", "bare_nuclei", "bland_chromatin",
       "normal_nucleoli", "mitoses", "class"]

GERMAN = ["checking_status", "duration", "credit_history", "purpose", "credit_amount",
          "savings_status", "employment", "installment_rate", "personal_status",
          "other_parties", "residence_since", "property_magnitude", "age",
          "other_payment_plans", "housing", "existing_credits", "job", "num_dependents",
          "own_telephone", "foreign_worker", "class"]

LYMPH = ["class", "lymphatics", "block_of_affere", "bl_of_lymph_c", "bl_of_lymph_s", "by_pass",
         "extravasates", "regeneration_of", "early_uptake_in", "lym_nodes_dimin",
         "lym_nodes_enlar", "changes_in_lym", "defect_in_node", "changes_in_node",
         "changes_in_stru", "special_forms", "dislocation_of", "exclusion_of_no",
         "no_of_nodes_in"]

NPHA = ["number_of_doctors_visited", "age", "physical_health", "mental_health", "dental_health",
        "employment", "stress_keeps_patient_from_sleeping",
        "medication_keeps_patient_from_sleeping", "pain_keeps_patient_from_sleeping",
        "bathroom_needs_keeps_patient_from_sleeping", "unknown_keeps_patient_from_sleeping",
        "trouble_sleeping", "prescription_sleep_medication", "race", "gender"]

NURSERY = ["parents", "has_nurs", "form", "children", "housing", "finance", "social", "health",
           "class"]

SOLAR = ["zurich_class", "largest_spot_size", "spot_distribution", "activity", "evolution",
         "previous_activity", "complex", "became_complex", "area", "area_largest",
         "c_class", "m_class", "x_class"]

SPECT = ["overall_diagnosis"] + [f"F{i}" for i in range(1, 23)]


def write_table(path, header, rows, delimiter=","):
    for record in [header] + rows:
        if len(record) != len(header):
            raise ValueError(f"{path.name}: row with {len(record)} fields, header has {len(header)}")
        for field in record:
            if delimiter in field or "\n" in field or "\r" in field:
                raise ValueError(f"{path.name}: field {field!r} contains the delimiter")
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as f:
        for record in [header] + rows:
            f.write(delimiter.join(record) + "\n")
    print(f"  wrote {path} ({len(rows)} rows)")


def require(raw, name):
    path = raw / name
    if not path.is_file():
        raise FileNotFoundError(f"{path} not found (run fetch_uci.sh first)")
    return path


def delimited_rows(path, n_fields, sep=None, comment=None, strip_trailing_dot=False):
    """Rows as field lists; sep=None splits on whitespace. Lines that are
    blank, start with `comment`, or have the wrong field count are dropped."""
    rows = []
    skipped = 0
    for line in path.read_text(encoding="utf-8", errors="replace").splitlines():
        line = line.strip()
        if not line or (comment and line.startswith(comment)):
            continue
        fields = [f.strip() for f in (line.split(sep) if sep else line.split())]
        if strip_trailing_dot and fields and fields[-1].endswith("."):
            fields[-1] = fields[-1][:-1]
        if len(fields) != n_fields:
            skipped += 1
            continue
        rows.append(fields)
    if skipped:
        print(f"  note: skipped {skipped} malformed line(s) in {path.name}")
    if not rows:
        raise ValueError(f"{path.name}: no usable rows")
    return rows


def zip_member_rows(path, member_suffix, delimiter):
    """Parse one CSV member of a zip archive; returns (header, rows)."""
    with zipfile.ZipFile(path) as z:
        names = [n for n in z.namelist() if n.endswith(member_suffix)]
        if not names:
            raise ValueError(f"{path.name}: no member ending in {member_suffix}")
        with z.open(names[0]) as raw_member:
            text = io.TextIOWrapper(raw_member, encoding="utf-8", errors="replace")
            reader = csv.reader(text, delimiter=delimiter, quotechar='"')
            table = [[f.strip() for f in row] for row in reader if row]
    return table[0], table[1:]


def convert_adult(raw, out):
    write_table(out / "adult.csv",
                ADULT, delimited_rows(require(raw, "adult.data"), 15, sep=","))
    write_table(out / "adult_test.csv",
                ADULT, delimited_rows(require(raw, "adult.test"), 15, sep=",", comment="|",
                                      strip_trailing_dot=True))


def convert_australian(raw, out):
    write_table(out / "australian.csv",
                AUSTRALIAN, delimited_rows(require(raw, "australian.dat"), 15))


def convert_bank(raw, out):
    # bank.zip ships bank-full.csv and a documented 10% sample named bank.csv;
    # the sample is the benchmark-sized one.
    header, rows = zip_member_rows(require(raw, "bank.zip"), "bank.csv", ";")
    if header != ["age", "job", "marital", "education", "default", "balance", "housing", "loan",
                  "contact", "day", "month", "duration", "campaign", "pdays", "previous",
                  "poutcome", "y"]:
        raise ValueError("bank.csv: unexpected column names")
    write_table(out / "bank.csv", header, rows, delimiter=";")


def convert_breast_cancer(raw, out):
    write_table(out / "breast_cancer_wisconsin.csv",
                BCW, delimited_rows(require(raw, "breast-cancer-wisconsin.data"), 11, sep=","))


def convert_german(raw, out):
    write_table(out / "german.csv", GERMAN, delimited_rows(require(raw, "german.data"), 21))


def convert_lymphography(raw, out):
    write_table(out / "lymphography.csv",
                LYMPH, delimited_rows(require(raw, "lymphography.data"), 19, sep=","))


def convert_npha(raw, out):
    header, rows = zip_member_rows(require(raw, "npha.zip"), ".csv", ",")
    if len(header) != len(NPHA):
        raise ValueError(f"npha: expected {len(NPHA)} columns, found {len(header)}")
    write_table(out / "npha.csv", NPHA, rows)


def convert_nursery(raw, out):
    write_table(out / "nursery.csv",
                NURSERY, delimited_rows(require(raw, "nursery.data"), 9, sep=","))


def convert_solar_flare(raw, out):
    write_table(out / "solar_flare_big.csv",
                SOLAR, delimited_rows(require(raw, "flare.data2"), 13))
    write_table(out / "solar_flare_small.csv",
                SOLAR, delimited_rows(require(raw, "flare.data1"), 13))


def convert_spect(raw, out):
    write_table(out / "spect_train.csv",
                SPECT, delimited_rows(require(raw, "SPECT.train"), 23, sep=","))
    write_table(out / "spect_test.csv",
                SPECT, delimited_rows(require(raw, "SPECT.test"), 23, sep=","))


def convert_student(raw, out):
    header, rows = zip_member_rows(require(raw, "student.zip"), "student-por.csv", ";")
    if len(header) != 33 or header[-1] != "G3":
        raise ValueError("student-por.csv: unexpected column layout")
    write_table(out / "student_por.csv", header, rows, delimiter=";")


CONVERTERS = {
    "adult": convert_adult,
    "australian": convert_australian,
    "bank": convert_bank,
    "breast_cancer": convert_breast_cancer,
    "german": convert_german,
    "lymphography": convert_lymphography,
    "npha": convert_npha,
    "nursery": convert_nursery,
    "solar_flare": convert_solar_flare,
    "spect": convert_spect,
    "student": convert_student,
}


def main():
    root = Path(__file__).resolve().parent.parent
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--raw", default=str(root / "data" / "raw"),
                    help="directory holding the raw UCI downloads")
    ap.add_argument("--out", default=str(root / "data" / "uci"),
                    help="directory to write the converted tables into")
    ap.add_argument("--datasets", default="",
                    help="comma-separated subset of: " + ", ".join(sorted(CONVERTERS)))
    args = ap.parse_args()

    wanted = [d.strip() for d in args.datasets.split(",") if d.strip()] or sorted(CONVERTERS)
    unknown = [d for d in wanted if d not in CONVERTERS]
    if unknown:
        ap.error(f"unknown dataset(s): {', '.join(unknown)}")

    raw = Path(args.raw)
    out = Path(args.out)
    failed = []
    for name in wanted:
        print(f"{name}:")
        try:
            CONVERTERS[name](raw, out)
        except Exception as e:  # keep converting the rest
            print(f"  skipped: {e}")
            failed.append(name)

    done = [d for d in wanted if d not in failed]
    if done:
        print(f"\nconverted {len(done)}/{len(wanted)} dataset(s) into {out}")
        print("point the manifest `path` entries there (e.g. path = ../../data/uci/adult.csv)")
        print("to run on the real tables. Result numbers will differ from the bundled")
        print("synthetic tables; the calibrated breast_cancer expectations only hold for those.")
    if failed:
        print(f"failed: {', '.join(failed)}", file=sys.stderr)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
