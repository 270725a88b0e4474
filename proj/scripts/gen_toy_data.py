#!/usr/bin/env python3
# Copyright 2026 the Persian readability toolkit authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generates the small Persian demo corpus under data/toy.

Deterministic: a fixed seed produces the exact files checked into the
repository. Rerun after editing the word pools to refresh them.
"""

import json
import random
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
TOY = ROOT / "data" / "toy"
SEED = 20260823

# Word pools per difficulty tier: (word, tag).
EASY_NOUNS = [
    ("آب", "N"), ("نان", "N"), ("خانه", "N"), ("مادر", "N"), ("پدر", "N"),
    ("کتاب", "N"), ("روز", "N"), ("شب", "N"), ("دست", "N"), ("راه", "N"),
    ("دل", "N"), ("کار", "N"), ("شهر", "N"), ("باغ", "N"), ("گل", "N"),
    ("درخت", "N"), ("ماه", "N"), ("سال", "N"), ("دوست", "N"), ("چشم", "N"),
]
EASY_VERBS = [
    ("است", "V"), ("بود", "V"), ("رفت", "V"), ("آمد", "V"), ("دید", "V"),
    ("گفت", "V"), ("دارد", "V"), ("کرد", "V"), ("شد", "V"),
]
EASY_ADJS = [
    ("خوب", "ADJ"), ("بزرگ", "ADJ"), ("کوچک", "ADJ"), ("زیبا", "ADJ"),
    ("سرد", "ADJ"), ("گرم", "ADJ"), ("تازه", "ADJ"),
]
MEDIUM_NOUNS = [
    ("مدرسه", "N"), ("آموزش", "N"), ("خانواده", "N"), ("طبیعت", "N"),
    ("فرهنگ", "N"), ("تاریخ", "N"), ("جامعه", "N"), ("اقتصاد", "N"),
    ("ورزش", "N"), ("سلامتی", "N"), ("برنامه", "N"), ("تجربه", "N"),
    ("موضوع", "N"), ("داستان", "N"), ("کتابخانه", "N"), ("روزنامه", "N"),
]
MEDIUM_VERBS = [
    ("نوشت", "V"), ("خواند", "V"), ("آموخت", "V"), ("پذیرفت", "V"),
    ("ساخت", "V"), ("شناخت", "V"),
]
MEDIUM_ADJS = [
    ("مهم", "ADJ"), ("فراوان", "ADJ"), ("گوناگون", "ADJ"), ("مشهور", "ADJ"),
    ("قدیمی", "ADJ"), ("جدید", "ADJ"), ("ارزشمند", "ADJ"),
]
HARD_NOUNS = [
    ("استقلال", "N"), ("مسئولیت", "N"), ("فناوری", "N"), ("فلسفه", "N"),
    ("نظریه‌پردازی", "N"), ("زیست‌شناسی", "N"), ("جهانی‌سازی", "N"),
    ("ساختارگرایی", "N"), ("پدیدارشناسی", "N"), ("معرفت‌شناسی", "N"),
    ("روان‌شناسی", "N"), ("تمدن", "N"), ("حاکمیت", "N"), ("مشروطیت", "N"),
    ("ایدئولوژی", "N"), ("دموکراسی", "N"), ("اصطلاحات", "N"),
    ("الکترومغناطیس", "N"),
]
HARD_VERBS = [
    ("استنباط", "N"), ("تبیین", "N"), ("پرداخت", "V"), ("برشمرد", "V"),
    ("واکاوید", "V"),
]
HARD_ADJS = [
    ("پیچیده", "ADJ"), ("انتزاعی", "ADJ"), ("بنیادین", "ADJ"),
    ("معرفتی", "ADJ"), ("ساختاری", "ADJ"), ("نظام‌مند", "ADJ"),
]
PRONOUNS = [("من", "PRO"), ("تو", "PRO"), ("او", "PRO"), ("ما", "PRO"),
            ("شما", "PRO"), ("آنها", "PRO")]
PREPS = [("در", "P"), ("به", "P"), ("از", "P"), ("با", "P"), ("بر", "P"),
         ("تا", "P")]
CONJS = [("و", "CONJ"), ("که", "CONJ"), ("اما", "CONJ"), ("یا", "CONJ")]
ADVS = [("همیشه", "ADV"), ("اکنون", "ADV"), ("دیروز", "ADV"),
        ("امروز", "ADV"), ("آهسته", "ADV")]

STOPWORDS = [w for w, _ in PREPS + CONJS + PRONOUNS] + [
    "است", "بود", "شد", "این", "آن", "هم", "نیز", "را", "اگر", "هر", "چه",
    "برای",
]

TIERS = {
    "easy": dict(nouns=EASY_NOUNS, verbs=EASY_VERBS, adjs=EASY_ADJS,
                 sent_len=(3, 6), n_sents=(3, 5)),
    "medium": dict(nouns=MEDIUM_NOUNS + EASY_NOUNS[:6],
                   verbs=MEDIUM_VERBS + EASY_VERBS[:3],
                   adjs=MEDIUM_ADJS, sent_len=(6, 10), n_sents=(4, 7)),
    "hard": dict(nouns=HARD_NOUNS + MEDIUM_NOUNS[:4],
                 verbs=HARD_VERBS + MEDIUM_VERBS[:2],
                 adjs=HARD_ADJS, sent_len=(9, 14), n_sents=(5, 8)),
}
TIER_LABEL = {"easy": 0, "medium": 1, "hard": 2}
LABELS = ["easy", "medium", "hard"]


def make_sentence(rng, pool):
    lo, hi = pool["sent_len"]
    length = rng.randint(lo, hi)
    words = []
    words.append(rng.choice(pool["nouns"])[0])
    while len(words) < length - 1:
        kind = rng.random()
        if kind < 0.35:
            words.append(rng.choice(pool["nouns"])[0])
        elif kind < 0.5:
            words.append(rng.choice(pool["adjs"])[0])
        elif kind < 0.65:
            words.append(rng.choice(PREPS)[0])
        elif kind < 0.75:
            words.append(rng.choice(CONJS)[0])
        elif kind < 0.85:
            words.append(rng.choice(PRONOUNS)[0])
        else:
            words.append(rng.choice(ADVS)[0])
    words.append(rng.choice(pool["verbs"])[0])
    terminator = rng.choice([".", ".", ".", "؟"])
    return " ".join(words) + terminator


def make_doc(rng, tier):
    pool = TIERS[tier]
    lo, hi = pool["n_sents"]
    return " ".join(make_sentence(rng, pool)
                    for _ in range(rng.randint(lo, hi))) + "\n"


def main():
    rng = random.Random(SEED)
    corpus_dir = TOY / "corpus"
    corpus_dir.mkdir(parents=True, exist_ok=True)

    # --- corpus: 70 easy, 70 medium, 60 hard ---
    docs = {}
    for tier, count in (("easy", 70), ("medium", 70), ("hard", 60)):
        for i in range(count):
            doc_id = f"{tier}_{i:03d}"
            docs[doc_id] = (tier, make_doc(rng, tier))
    for doc_id, (_, text) in sorted(docs.items()):
        (corpus_dir / f"{doc_id}.txt").write_text(text, encoding="utf-8")

    # --- gold set: the first three texts of each tier ---
    gold_ids = [f"{tier}_{i:03d}" for tier in LABELS for i in range(3)]
    with open(TOY / "gold.jsonl", "w", encoding="utf-8") as out:
        for gid in gold_ids:
            out.write(json.dumps({"text": gid, "label": docs[gid][0]},
                                 ensure_ascii=False) + "\n")

    # --- label log ---
    voters = [f"voter_{i:02d}" for i in range(18)]
    records = []
    ts = 1000
    for doc_id, (tier, _) in sorted(docs.items()):
        true_label = TIER_LABEL[tier]
        n_votes = rng.choice([3, 3, 4, 4])
        for voter in rng.sample(voters, n_votes):
            # Good voters agree with the tier 93% of the time.
            if rng.random() < 0.93:
                label = true_label
            else:
                label = rng.choice([l for l in range(3) if l != true_label])
            records.append({"voter": voter, "text": doc_id,
                            "label": LABELS[label], "ts": str(ts)})
            ts += 1
    # Every voter answers the gold set (correctly for good voters).
    for voter in voters:
        for gid in gold_ids:
            records.append({"voter": voter, "text": gid,
                            "label": docs[gid][0], "ts": str(ts)})
            ts += 1
    # One adversarial voter: always the wrong label, including on gold.
    wrong = {"easy": "hard", "medium": "easy", "hard": "medium"}
    for doc_id in rng.sample(sorted(docs), 30) + gold_ids:
        tier = docs[doc_id][0]
        records.append({"voter": "voter_bad", "text": doc_id,
                        "label": wrong[tier], "ts": str(ts)})
        ts += 1
    with open(TOY / "labels.jsonl", "w", encoding="utf-8") as out:
        for r in records:
            out.write(json.dumps(r, ensure_ascii=False) + "\n")

    # --- tagged corpus for the lexicon tagger ---
    tagged_vocab = (EASY_NOUNS + MEDIUM_NOUNS + HARD_NOUNS + EASY_VERBS +
                    MEDIUM_VERBS + HARD_VERBS + EASY_ADJS + MEDIUM_ADJS +
                    HARD_ADJS + PRONOUNS + PREPS + CONJS + ADVS)
    with open(TOY / "tagged_corpus.txt", "w", encoding="utf-8") as out:
        out.write("# toy tagged corpus: word/TAG tokens, one sentence "
                  "per line\n")
        for start in range(0, len(tagged_vocab), 8):
            chunk = tagged_vocab[start:start + 8]
            out.write(" ".join(f"{w}/{t}" for w, t in chunk) + "\n")
        out.write("\n")
        # A second document of random sentences for majority statistics.
        for _ in range(40):
            chunk = rng.sample(tagged_vocab, rng.randint(4, 8))
            out.write(" ".join(f"{w}/{t}" for w, t in chunk) + "\n")

    # --- stopword list ---
    with open(ROOT / "data" / "stopwords_fa.txt", "w",
              encoding="utf-8") as out:
        out.write("# common Persian function words\n")
        for w in dict.fromkeys(STOPWORDS):
            out.write(w + "\n")

    print(f"wrote {len(docs)} docs, {len(records)} label records")


if __name__ == "__main__":
    main()
