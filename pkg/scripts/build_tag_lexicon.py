#!/usr/bin/env python3
"""Regenerate the bundled tag lexicon and irregular-lemma table.

Inflects the base word lists below (3sg/-ing/-ed verb forms, noun
plurals), resolves tag collisions through OVERRIDES, and records an
irregular-lemma row for every inflected form the rule-based lemmatizer
cannot invert on its own. Output is deterministic.

Usage: python scripts/build_tag_lexicon.py
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from cotir.nlp import Token, _noun_lemma, _verb_lemma  # noqa: E402

DATA_DIR = ROOT / "src" / "cotir" / "data"

VERB_BASES = """
accept access acknowledge act activate adapt add adjust administer advise
aggregate alert align allocate allow analyze append apply approve archive
arrange assemble assess assign associate assume attach attempt audit
authenticate authorize automate average avoid back balance base batch begin
behave belong bind block boot broadcast browse buffer build bypass cache
calculate calibrate call cancel capture cause change characterize charge check
choose cite classify clean clear click close cluster collect combine comment
commit communicate compare compile complete compress compute conclude
configure confirm connect consider consist consolidate constrain construct
consume contain continue contribute control convert coordinate copy correct
correlate correspond count cover create customize deactivate debug decide
declare decode decompress decrease decrypt dedicate define delay delegate
delete deliver demonstrate denote deny depend deploy derive describe design
detect determine develop differ digitize direct disable disallow discard
disconnect discover display dispose distinguish distribute divide document
download drop duplicate edit elevate eliminate employ enable encode encrypt
end enforce enhance enroll ensure enter enumerate erase escalate establish
estimate evaluate examine exceed exchange exclude execute exist exit expand
expect expire explain export expose extend extract fail fetch fill filter
finalize find finish fix flag flush focus follow force format forward gather
generate grant group guarantee guard guide halt handle happen hash help hide
highlight hold host identify ignore implement import improve include
incorporate increase indicate infer inform initialize initiate inject insert
inspect install instantiate integrate intend interact intercept interface
interpret interrupt introduce invalidate inventory invoke involve isolate
issue iterate join keep label launch learn limit link list listen load locate
lock log login maintain manage manipulate map mark match measure merge
migrate minimize mirror modify monitor mount move name navigate need nest
normalize note notify obtain occur offer omit open operate optimize order
organize outline output override overwrite own package page parse partition
pass pause perform permit persist place plan plot point poll populate post
precede predict prepare present preserve prevent print prioritize process
produce prohibit prompt propagate propose protect prove provide provision
publish pull purge push qualify quantify query queue quote raise randomize
rank rate reach react read reboot receive recognize recommend recompute
reconcile reconfigure record recover redirect redo reduce refer reference
refine reflect refresh regenerate register reject relate relay release
reload remain remind remove rename render reorder repair repeat replace
replay replicate report represent reproduce request require rescan reserve
reset reside resize resolve respond restart restore restrict resume retain
retrieve retry return reuse review revise revoke roll rotate route run
sample sanitize satisfy save scale scan schedule scroll search secure seed
select send separate sequence serialize serve set share shift ship show shut
sign signal simplify simulate skip sort specify split spool stamp standardize
start state stop store stream strip structure submit subscribe substitute
succeed suggest summarize supersede supervise supply support suppress suspend
switch synchronize tag take target terminate test throttle time toggle trace
track train transfer transform translate transmit traverse treat trigger trim
truncate trust try tune turn undo unify uninstall unlock unsubscribe update
upgrade upload use utilize validate vary verify view violate wait warn watch
wipe wrap write zoom
""".split()

IRREGULAR_VERBS = {
    "be": ["am", "is", "are", "was", "were", "been", "being"],
    "become": ["became"],
    "begin": ["began", "begun"],
    "break": ["broke", "broken"],
    "bring": ["brought"],
    "build": ["built"],
    "buy": ["bought"],
    "catch": ["caught"],
    "choose": ["chose", "chosen"],
    "come": ["came"],
    "cut": ["cut"],
    "deal": ["dealt"],
    "do": ["does", "did", "done", "doing"],
    "draw": ["drew", "drawn"],
    "fall": ["fell", "fallen"],
    "feel": ["felt"],
    "find": ["found"],
    "get": ["got", "gotten"],
    "give": ["gave", "given"],
    "go": ["went", "gone", "goes"],
    "grow": ["grew", "grown"],
    "have": ["has", "had", "having"],
    "hear": ["heard"],
    "hit": ["hit"],
    "hold": ["held"],
    "keep": ["kept"],
    "know": ["knew", "known"],
    "lead": ["led"],
    "learn": ["learnt"],
    "leave": ["left"],
    "let": ["let"],
    "lose": ["lost"],
    "make": ["made"],
    "mean": ["meant"],
    "meet": ["met"],
    "pay": ["paid"],
    "put": ["put"],
    "read": ["read"],
    "rise": ["rose", "risen"],
    "run": ["ran"],
    "say": ["said"],
    "see": ["saw", "seen"],
    "sell": ["sold"],
    "send": ["sent"],
    "show": ["showed", "shown"],
    "shut": ["shut"],
    "speak": ["spoke", "spoken"],
    "spend": ["spent"],
    "split": ["split"],
    "stand": ["stood"],
    "take": ["took", "taken"],
    "teach": ["taught"],
    "tell": ["told"],
    "think": ["thought"],
    "understand": ["understood"],
    "win": ["won"],
    "write": ["wrote", "written"],
}

# monosyllabic (or stress-final) bases that double the final consonant
DOUBLE_FINAL = {
    "stop", "plan", "submit", "commit", "permit", "refer", "transfer", "log",
    "flag", "tag", "map", "wrap", "drop", "skip", "trim", "scan", "plug",
    "swap", "step", "stamp", "ship", "spool", "begin", "set", "put", "cut",
    "hit", "let", "shut", "win", "run", "drag", "prefer",
}

NOUNS = """
ability access account accuracy action activity adapter address administrator
agent alarm alert algorithm amount analysis application approach architecture
archive area argument arrival assembly assertion assessment assignment
assumption attachment attribute audit authentication authorization
availability backup bandwidth bar baseline batch battery behavior benchmark
bin bit block board body boundary box breach browser budget buffer bug bus
button byte cable cache calendar camera capability capacity card case
catalog category cell certificate chain chair change channel chapter
character characteristic chart checklist checkpoint checksum circuit city
class classroom client clock cloud cluster code collection column command
comment communication community company comparison compiler component
compression computer concept conclusion condition conference confidence
configuration conflict connection connector console constant constraint
consumer contact container content context contract contractor control
controller convention coordinate copy core corner correction cost counter
country course cpu credential credit criterion customer cycle dashboard data
database dataset date day deadline decision default defect definition degree
delay deletion delivery demand density department dependency deployment
description design designer desk desktop detail detector developer device
diagram dialog dictionary difference digit direction directory disk display
distance distribution document documentation domain door dot download draft
driver duration duty edge editor effect effort element email employee
encoding encryption end endangerment endpoint engine engineer enrollment
entity entry environment equipment error estimate evaluation evening event
evidence exam example exception exchange execution exercise expectation
experiment expert expiration export expression extension facility factor
factory failure fan feature feedback field figure file filter firewall
firmware fleet floor flow folder font forecast forest form formula frame
framework frequency function gateway glossary goal grade graph grid group
guide guideline hall handler hardware hazard header height helpdesk hierarchy
histogram history home homework host hour house humidity icon idea identifier
identity image impact implementation importance incident index indication
indicator information infrastructure input inspection installation instance
institution instruction instructor instrument integration integrity intent
interaction interest interface interruption interval inventory investigation
item job journal key keyboard keyword kind kit lab label laboratory language
laptop latency launch layer layout leader lecture length lesson letter level
library license lifecycle lifetime light limit line link list location lock
log logic login logout machine mail maintenance malfunction manager manual
margin marker mask master material matrix maximum meaning measure measurement
mechanism media meeting member membership memory menu message metadata meter
method metric midnight milestone minimum minute mode model module moment
money monitor month morning mouse name need network night node noise noon
notation note notebook notice notification number object objective
observation occurrence offer office officer offset operation operator option
order organization origin outage outcome outline output overview owner
package packet page panel paper paragraph parameter parent park part
participant partition partnership password patch path pattern payload payment
penalty percentage performance period permission person personnel phase phone
picture piece pilot pipeline place plan plane platform plugin point policy
pool port portal portion position power prefix presence presentation
principle printer priority privacy privilege probability problem procedure
product profile program programmer progress project projector proof property
proposal protection protocol prototype provider purpose quality quantity
quarter query question queue quiz quota radio rack range rate ratio reader
reading reason receipt receiver recipient recommendation record recovery
redundancy reference refinement region register registration regulation
relation relationship release reliability remainder reminder repair report
repository representation request requirement reservation resident resolution
resource response responsibility restriction result retention retry review
revision right risk road robot role room root roster route router routine
row rule safety salary sample scenario schedule schema scheme school scope
score screen screenshot script scroll search season seat second section
sector security segment selection semester seminar sensor sentence sequence
series server service session setting setup severity shape sheet shelf shift
side sign signal signature site situation size slot software solution source
space specification spectrum speed sprint staff stage stakeholder standard
state statement station statistic status step storage store strategy stream
street string structure student study subject submission subnet subsection
subsystem suffix suggestion suite summary supervisor supplier surface survey
switch syllabus symbol syntax system tab table tablet target task teacher
team technique technology telephone television temperature template term
terminal test text textbook theme theory thing thread threshold ticket tier
type
time timeline timeout timestamp timer title token tool topic total town trace
track traffic transaction transcript transition tree trend truck tutor
tutorial unit university update upgrade uptime usage user utility
validation value variable variant vehicle vendor verification version video
view village violation visibility vision visit visitor voltage volume
vulnerability wall warehouse warning watchdog water web website week weight
wheel window wire word work workflow workshop workstation world year zone
telemetry valve actuator pump setpoint interlock uplink downlink mission
waypoint sortie operator
""".split()

IRREGULAR_NOUN_PLURALS = {
    "child": "children",
    "person": "people",
    "man": "men",
    "woman": "women",
    "foot": "feet",
    "tooth": "teeth",
    "criterion": "criteria",
    "medium": "media",
    "index": "indices",
    "matrix": "matrices",
    "vertex": "vertices",
    "appendix": "appendices",
    "axis": "axes",
    "analysis": "analyses",
    "hypothesis": "hypotheses",
    "series": "series",
    "species": "species",
    "datum": "data",
}

ADJECTIVES = """
able absent acceptable accessible accurate active actual additional adequate
administrative advanced alternative annual anonymous applicable
appropriate approximate automatic available average aware bad basic binary
blue brief broad busy capable careful central certain cheap clean
clear cold common compatible complete complex compliant concurrent
configurable consistent constant cool correct critical current custom daily
dangerous dark dedicated deep dependent detailed different difficult digital
direct dirty distinct double dry due dynamic early easy effective efficient
electronic eligible empty entire equal equivalent essential exact excessive
expensive explicit external extra false fast faulty final fine firm first
fixed flexible formal fourth free frequent fresh full functional general
global good graphical gray great green hard heavy high historical horizontal
hot hourly huge human identical immediate implicit important inactive
incoming incorrect independent individual initial internal invalid large
last late latest least legal light likely limited local logical long loose
loud low main mandatory manual maximum measurable minimal minimum minor
missing mobile modern monthly multiple mutual narrow national near necessary
negative new next nominal normal numeric odd official offline old online only
open operational optional orange original outgoing overall parallel partial
particular past pending periodic permanent persistent personal physical
portable positive possible potential precise predefined previous primary
prior private proper public quick quiet rapid rare raw ready real
reasonable recent rectangular red redundant regular related relative relevant
reliable remaining remote responsible restricted robust rough round safe same
scalable second secondary secure sensitive separate sequential serious
severe shared short significant similar simple single slow small smart social
soft solid special specific square stable standby static steady strict strong
subsequent successful sufficient suitable suspicious technical temporary
tertiary thick thin third tight tiny total tough transparent true typical
unauthorized unavailable unique unknown unlimited upper urgent usable useful
usual valid various vertical virtual visible visual warm weak weekly wet
white wide wireless wrong yearly yellow young
""".split()

ADVERBS = """
abroad again ago almost alone already also altogether always anywhere
approximately automatically away back badly daily down early elsewhere enough
even ever everywhere far fairly forever forward further hence here how
however indeed instead just later least less manually maybe more moreover
most much nearly never nevertheless next no normally not now nowhere often
once only otherwise out over perhaps quite rather regularly seldom so
sometimes somewhat somewhere soon still then thereafter therefore thus today
together tomorrow too twice typically up very well yesterday yet
""".split()

DETERMINERS = """
the a an each every all some any both either neither another such these those
""".split()

PRONOUNS = """
it they them he she we you i who whom which that this what whatever whoever
its his her their our your my mine yours theirs itself themselves himself
herself myself ourselves something anything nothing everything someone anyone
everyone nobody
""".split()

ADPOSITIONS = """
of in to for with on by at from as into within without onto upon per via
over under between through during against about after before behind beyond
near above below across along around toward towards among amid despite
except until since off regarding according concerning
""".split()

CONJUNCTIONS = """
and or but nor if when whenever while although though because unless whether
plus versus
""".split()

NUMBER_WORDS = """
zero one two three four five six seven eight nine ten eleven twelve thirteen
fourteen fifteen sixteen seventeen eighteen nineteen twenty thirty forty
fifty sixty seventy eighty ninety hundred thousand million billion
""".split()

MODALS = "shall must should will may can could would might".split()

# surface-level tag resolutions for collision-prone words (applied last)
OVERRIDES = {
    "display": "NOUN",       # "a visual display"; displayed/displaying stay VERB
    "reading": "NOUN",       # sensor reading, not the -ing form of read
    "readings": "NOUN",
    "sets": "NOUN",          # "sets of dots"; base "set" stays VERB
    "regarding": "ADP",
    "according": "ADP",
    "concerning": "ADP",
    "real-time": "ADJ",
    "two-dimensional": "ADJ",
    "three-dimensional": "ADJ",
    "user-friendly": "ADJ",  # -ly suffix rule would call it an adverb
    "friendly": "ADJ",
    "fail-safe": "ADJ",
    "node's": "NOUN",
    "user's": "NOUN",
    "there": "ADV",
    "more": "ADV",
    "most": "ADV",
    "no": "DET",
    "that": "PRON",
    "this": "PRON",
    "monitoring": "NOUN",    # "the monitoring", EMMON domain usage
    "maximum": "ADJ",        # "maximum allowed values"
    "minimum": "ADJ",
    "left": "ADJ",
    # base-form noun/verb collisions resolved toward SRS-typical usage
    "alert": "NOUN",
    "warning": "NOUN",
    "map": "NOUN",
    "archive": "NOUN",
    "audit": "NOUN",
    "interface": "NOUN",
    "name": "NOUN",
    "shutdown": "NOUN",
    "up": "ADP",             # "up to 1 year"
    "found": "VERB",
    "means": "VERB",
    "need": "VERB",
    "needs": "VERB",
    "production": "NOUN",
    "processes": "VERB",     # "the system processes ..." (SRS prose)
    "control": "NOUN",
    "controls": "NOUN",
    "filter": "NOUN",
    "filters": "NOUN",
    "monitor": "VERB",
    "time": "NOUN",
    "times": "NOUN",
    "state": "NOUN",
    "states": "NOUN",
    "order": "VERB",
    "orders": "NOUN",
    "record": "VERB",
    "records": "NOUN",
    "report": "VERB",
    "reports": "NOUN",
    "request": "VERB",
    "requests": "NOUN",
    "result": "NOUN",
    "results": "NOUN",
    "test": "NOUN",
    "tests": "NOUN",
    "review": "VERB",
    "reviews": "NOUN",
    "schedule": "VERB",
    "schedules": "NOUN",
    "measure": "VERB",
    "measures": "NOUN",
    "course": "NOUN",
    "courses": "NOUN",
    "interest": "NOUN",
    "access": "VERB",
    "copy": "NOUN",
    "copies": "NOUN",
    "use": "VERB",
    "uses": "VERB",
    "using": "VERB",
    "used": "VERB",
}


def verb_s(base: str) -> str:
    if base.endswith(("s", "x", "z", "ch", "sh", "o")):
        return base + "es"
    if base.endswith("y") and base[-2] not in "aeiou":
        return base[:-1] + "ies"
    return base + "s"


def verb_ing(base: str) -> str:
    if base in DOUBLE_FINAL:
        return base + base[-1] + "ing"
    if base.endswith("ie"):
        return base[:-2] + "ying"
    if base.endswith("e") and not base.endswith(("ee", "oe", "ye")):
        return base[:-1] + "ing"
    return base + "ing"


def verb_ed(base: str) -> str:
    if base in DOUBLE_FINAL:
        return base + base[-1] + "ed"
    if base.endswith("e"):
        return base + "d"
    if base.endswith("y") and base[-2] not in "aeiou":
        return base[:-1] + "ied"
    return base + "ed"


def noun_plural(base: str) -> str:
    if base in IRREGULAR_NOUN_PLURALS:
        return IRREGULAR_NOUN_PLURALS[base]
    if base.endswith(("s", "x", "z", "ch", "sh")):
        return base + "es"
    if base.endswith("y") and base[-2] not in "aeiou":
        return base[:-1] + "ies"
    if base.endswith("fe"):
        return base[:-2] + "ves"
    return base + "s"


def main() -> None:
    entries: dict[str, str] = {}
    irregulars: dict[str, str] = {}

    def put(word: str, tag: str) -> None:
        entries.setdefault(word, tag)

    # closed classes first so they win collisions with open-class lists
    for word in MODALS:
        put(word, "MODAL")
    for word in DETERMINERS:
        put(word, "DET")
    for word in PRONOUNS:
        put(word, "PRON")
    for word in ADPOSITIONS:
        put(word, "ADP")
    for word in CONJUNCTIONS:
        put(word, "CONJ")
    for word in NUMBER_WORDS:
        put(word, "NUM")
    for word in ADVERBS:
        put(word, "ADV")

    def check_verb_form(form: str, base: str) -> None:
        got = _verb_lemma(form, irregulars)
        if got != base:
            irregulars[form] = base

    for base in VERB_BASES:
        put(base, "VERB")
        check_verb_form(base, base)  # bases like "exceed" look inflected
        for form in (verb_s(base), verb_ing(base), verb_ed(base)):
            put(form, "VERB")
            check_verb_form(form, base)

    for base, forms in IRREGULAR_VERBS.items():
        put(base, "VERB")
        if base not in ("be", "have", "do"):  # their forms lists are complete
            put(verb_s(base), "VERB")
            check_verb_form(verb_s(base), base)
            ing = verb_ing(base)
            put(ing, "VERB")
            check_verb_form(ing, base)
        for form in forms:
            put(form, "VERB")
            if form != base:
                irregulars.setdefault(form, base)

    for base in NOUNS:
        put(base, "NOUN")
        if _noun_lemma(base, irregulars) != base:
            irregulars[base] = base
        plural = noun_plural(base)
        put(plural, "NOUN")
        got = _noun_lemma(plural, irregulars)
        if got != base:
            irregulars[plural] = base
    irregulars["data"] = "data"  # mass noun, never singularized

    for word in ADJECTIVES:
        put(word, "ADJ")

    for word, tag in OVERRIDES.items():
        entries[word] = tag

    DATA_DIR.mkdir(parents=True, exist_ok=True)
    lex_path = DATA_DIR / "tag_lexicon.tsv"
    with open(lex_path, "w", encoding="utf-8") as fh:
        fh.write("# tag lexicon: word<TAB>tag, one entry per surface form\n")
        fh.write(f"# entries: {len(entries)}\n")
        for word in sorted(entries):
            fh.write(f"{word}\t{entries[word]}\n")

    irr_path = DATA_DIR / "irregular_lemmas.tsv"
    with open(irr_path, "w", encoding="utf-8") as fh:
        fh.write("# irregular lemma table: form<TAB>lemma\n")
        fh.write(f"# entries: {len(irregulars)}\n")
        for word in sorted(irregulars):
            fh.write(f"{word}\t{irregulars[word]}\n")

    print(f"wrote {lex_path} ({len(entries)} entries)")
    print(f"wrote {irr_path} ({len(irregulars)} entries)")


if __name__ == "__main__":
    main()
