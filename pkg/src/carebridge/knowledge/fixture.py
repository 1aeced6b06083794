"""Built-in diabetes-domain graph fixture.

The shipped graph is generated deterministically from the seed lists
below (no RNG): curated core terms carry hand-written lay explanations,
aliases and disambiguation cues; the bulk groups (foods, activities,
labs, ...) are expanded from seed names with per-group explanation
templates. Regenerate the committed document with:

    python -m carebridge.knowledge.fixture > src/carebridge/knowledge/data/graph.tsv
"""

from __future__ import annotations

import re
from importlib import resources

from .graph import KnowledgeGraph, load_graph
from .matching import fold_text

_DATA_PACKAGE = "carebridge.knowledge"
_DATA_NAME = "data/graph.tsv"


def _slug(name: str) -> str:
    s = re.sub(r"[^a-z0-9]+", "-", name.lower()).strip("-")
    return s or "term"


# (canonical, aliases, category, explanation, cues, edges) where edges is a
# list of (relation, target canonical). Curated terms own their ids "c-<slug>".
_CURATED: list[tuple[str, list[str], str, str, list[str], list[tuple[str, str]]]] = [
    (
        "type 2 diabetes mellitus",
        ["type 2 diabetes", "T2DM", "adult-onset diabetes", "sugar disease", "糖尿病"],
        "condition",
        "A long-term condition in which the body stops responding well to insulin, so sugar builds up in the blood. It is managed with food choices, activity and medicine, not cured overnight.",
        ["distinct from type 1 diabetes, which usually starts in childhood"],
        [],
    ),
    (
        "type 1 diabetes mellitus",
        ["type 1 diabetes", "T1DM", "juvenile diabetes"],
        "condition",
        "A form of diabetes where the pancreas makes almost no insulin, usually starting young. People with it need insulin injections for life.",
        ["not caused by diet; different treatment path than type 2"],
        [("related_to", "type 2 diabetes mellitus")],
    ),
    (
        "prediabetes",
        ["borderline diabetes", "impaired glucose tolerance"],
        "condition",
        "Blood sugar that is higher than normal but not yet in the diabetes range. Food and exercise changes at this stage often prevent full diabetes.",
        [],
        [("related_to", "type 2 diabetes mellitus")],
    ),
    (
        "gestational diabetes",
        ["pregnancy diabetes"],
        "condition",
        "Diabetes that first appears during pregnancy. It usually goes away after delivery but raises the mother's later risk of type 2 diabetes.",
        [],
        [("related_to", "type 2 diabetes mellitus")],
    ),
    (
        "hypoglycemia",
        ["low blood sugar", "低血糖", "sugar crash"],
        "condition",
        "Blood sugar dropping too low, often below 3.9 mmol/L. It can cause shaking, sweating and confusion; eating fast-acting sugar brings it back up.",
        ["opposite of hyperglycemia"],
        [("related_to", "type 2 diabetes mellitus")],
    ),
    (
        "hyperglycemia",
        ["high blood sugar", "高血糖"],
        "condition",
        "Blood sugar that is too high. Over time it damages vessels and nerves, which is why daily control matters even when you feel fine.",
        ["opposite of hypoglycemia"],
        [("related_to", "type 2 diabetes mellitus")],
    ),
    (
        "insulin resistance",
        [],
        "condition",
        "When muscle, fat and liver cells stop answering insulin's signal, so the pancreas must make more and more. It is the engine behind most type 2 diabetes.",
        [],
        [("related_to", "type 2 diabetes mellitus")],
    ),
    (
        "diabetic ketoacidosis",
        ["DKA"],
        "condition",
        "A dangerous emergency where the body, starved of usable sugar, burns fat and floods the blood with acids. Needs hospital care right away.",
        ["more common in type 1 diabetes but possible in type 2"],
        [("related_to", "type 2 diabetes mellitus")],
    ),
    (
        "diabetic neuropathy",
        ["nerve damage from diabetes", "diabetic nerve pain"],
        "condition",
        "Nerve damage from years of high blood sugar, usually felt first as numbness, tingling or burning in the feet.",
        [],
        [("related_to", "type 2 diabetes mellitus")],
    ),
    (
        "diabetic nephropathy",
        ["diabetic kidney disease"],
        "condition",
        "Kidney damage caused by diabetes. It is silent at first; a urine protein test catches it early, when treatment works best.",
        [],
        [("related_to", "type 2 diabetes mellitus")],
    ),
    (
        "diabetic retinopathy",
        ["diabetic eye disease"],
        "condition",
        "Damage to the small vessels of the retina from high blood sugar. A yearly dilated eye exam can catch it before vision is lost.",
        [],
        [("related_to", "type 2 diabetes mellitus")],
    ),
    (
        "diabetic foot ulcer",
        ["diabetic foot", "foot ulcer"],
        "condition",
        "A slow-healing sore on the foot, made likely by nerve damage and poor circulation. Daily foot checks and well-fitting shoes prevent most of them.",
        [],
        [("related_to", "diabetic neuropathy")],
    ),
    (
        "hypertension",
        ["high blood pressure", "高血压"],
        "condition",
        "Blood pressure that stays too high. It teams up with diabetes to damage heart, kidneys and eyes, so both need treating together.",
        [],
        [("related_to", "type 2 diabetes mellitus")],
    ),
    (
        "hyperlipidemia",
        ["high cholesterol", "high blood fats"],
        "condition",
        "Too much cholesterol or other fats in the blood. With diabetes it sharply raises heart risk; statin tablets and food changes lower it.",
        [],
        [("related_to", "type 2 diabetes mellitus")],
    ),
    (
        "metformin",
        ["glucophage", "二甲双胍"],
        "drug",
        "The usual first tablet for type 2 diabetes. It helps the body respond to its own insulin and lowers sugar made by the liver. Taking it after meals eases stomach upset.",
        ["does not cause low blood sugar by itself"],
        [
            ("treats", "type 2 diabetes mellitus"),
            ("subtype_of", "biguanides"),
            ("contraindicated_with", "chronic kidney disease"),
        ],
    ),
    (
        "insulin",
        ["胰岛素"],
        "drug",
        "The hormone that moves sugar from the blood into cells. As an injected medicine it is the strongest way to lower blood sugar; the dose is matched to food and readings.",
        ["the hormone and the injected medicine share the name"],
        [("treats", "type 2 diabetes mellitus")],
    ),
    (
        "glycated hemoglobin",
        ["HbA1c", "A1C", "hemoglobin A1c", "糖化血红蛋白"],
        "metric",
        "A blood test showing average blood sugar over the past two to three months. Most adults with diabetes aim below 7 percent, but your doctor sets your target.",
        ["reflects months, not today's reading"],
        [("measures", "type 2 diabetes mellitus")],
    ),
    (
        "fasting blood glucose",
        ["fasting blood sugar", "FPG", "空腹血糖"],
        "metric",
        "Blood sugar measured after not eating for at least 8 hours, usually first thing in the morning. A common target is 4.4 to 7.0 mmol/L.",
        [],
        [("measures", "type 2 diabetes mellitus")],
    ),
    (
        "postprandial blood glucose",
        ["after-meal blood sugar", "postprandial glucose", "餐后血糖"],
        "metric",
        "Blood sugar measured about two hours after starting a meal. It shows how your body handled that food; below 10.0 mmol/L is a common goal.",
        [],
        [("measures", "type 2 diabetes mellitus")],
    ),
    (
        "blood glucose self-monitoring",
        ["finger-stick test", "blood sugar test", "测血糖"],
        "procedure",
        "Checking your own blood sugar with a small finger prick and a meter. The pattern of readings, not any single number, guides treatment changes.",
        [],
        [("measures", "type 2 diabetes mellitus")],
    ),
    (
        "continuous glucose monitoring",
        ["CGM", "glucose sensor"],
        "procedure",
        "A small sensor worn on the skin that reads sugar levels around the clock, showing trends and catching overnight lows that finger sticks miss.",
        [],
        [("measures", "type 2 diabetes mellitus")],
    ),
    (
        "oral glucose tolerance test",
        ["OGTT", "sugar drink test"],
        "procedure",
        "A clinic test where you drink a measured sugar solution and blood sugar is checked over two hours. It is how gestational diabetes and prediabetes are often found.",
        [],
        [("measures", "prediabetes")],
    ),
    (
        "carbohydrate counting",
        ["carb counting"],
        "lifestyle",
        "Tracking the grams of carbohydrate in meals, because carbohydrate moves blood sugar more than fat or protein. It lets meals stay flexible while doses stay matched.",
        [],
        [("related_to", "type 2 diabetes mellitus")],
    ),
    (
        "low glycemic index diet",
        ["low GI diet"],
        "lifestyle",
        "Choosing foods that release sugar slowly, such as whole grains and most vegetables, instead of foods that spike blood sugar quickly.",
        [],
        [("related_to", "carbohydrate counting")],
    ),
    (
        "aerobic exercise",
        ["cardio exercise"],
        "lifestyle",
        "Steady activity that raises your heart rate, like brisk walking or cycling. About 150 minutes a week, spread over most days, helps insulin work better.",
        [],
        [("related_to", "type 2 diabetes mellitus")],
    ),
    (
        "resistance training",
        ["strength training"],
        "lifestyle",
        "Exercise that works muscles against a load, such as bands or light weights. More muscle gives sugar somewhere to go, improving control between meals.",
        [],
        [("related_to", "aerobic exercise")],
    ),
    (
        "chronic kidney disease",
        ["CKD", "kidney failure"],
        "condition",
        "Kidneys gradually losing their filtering ability. Some diabetes medicines need dose changes or must be stopped as kidney function falls.",
        [],
        [("related_to", "diabetic nephropathy")],
    ),
    (
        "excessive thirst",
        ["polydipsia", "always thirsty"],
        "symptom",
        "Feeling thirsty far more than usual. With frequent urination it is a classic sign that blood sugar has been running high.",
        [],
        [("symptom_of", "hyperglycemia")],
    ),
    (
        "frequent urination",
        ["polyuria", "urinating often"],
        "symptom",
        "Needing to pass urine unusually often, including waking at night. High blood sugar pulls water into the urine and drags you to the bathroom.",
        [],
        [("symptom_of", "hyperglycemia")],
    ),
    (
        "blurred vision",
        ["blurry eyesight"],
        "symptom",
        "Vision going soft or out of focus. Swinging blood sugar changes the lens shape; persistent blur needs an eye exam to rule out retinopathy.",
        [],
        [("symptom_of", "hyperglycemia"), ("symptom_of", "diabetic retinopathy")],
    ),
    (
        "numbness in feet",
        ["numb feet", "loss of feeling in feet"],
        "symptom",
        "Reduced feeling in the feet, often starting at the toes. It is the most common first sign of diabetic nerve damage and a reason for daily foot checks.",
        [],
        [("symptom_of", "diabetic neuropathy")],
    ),
    (
        "cold sweat",
        ["sweating suddenly", "clammy skin"],
        "symptom",
        "Sudden sweating without heat or effort. Together with shakiness or hunger it often signals low blood sugar; check a reading if you can.",
        [],
        [("symptom_of", "hypoglycemia")],
    ),
    (
        "sulfonylureas",
        ["sulfonylurea tablets"],
        "drug",
        "An older family of tablets that push the pancreas to release more insulin. They work well but can cause low blood sugar, so meals should not be skipped.",
        ["class of drugs, not a single medicine"],
        [("treats", "type 2 diabetes mellitus")],
    ),
    (
        "biguanides",
        [],
        "drug",
        "The drug family metformin belongs to. They lower sugar output from the liver rather than pushing the pancreas.",
        ["class of drugs, not a single medicine"],
        [("treats", "type 2 diabetes mellitus")],
    ),
    (
        "DPP-4 inhibitors",
        ["gliptins"],
        "drug",
        "Tablets that help the body's own after-meal insulin signal last longer. Gentle on weight and unlikely to cause low blood sugar.",
        ["class of drugs, not a single medicine"],
        [("treats", "type 2 diabetes mellitus")],
    ),
    (
        "SGLT2 inhibitors",
        ["flozins"],
        "drug",
        "Tablets that let the kidneys pass extra sugar out in the urine. They also protect the heart and kidneys, but raise the chance of genital infections.",
        ["class of drugs, not a single medicine"],
        [("treats", "type 2 diabetes mellitus")],
    ),
    (
        "GLP-1 receptor agonists",
        ["GLP-1 agonists"],
        "drug",
        "Injection (and some tablet) medicines that copy a gut hormone: they boost insulin after meals, slow the stomach and reduce appetite.",
        ["class of drugs, not a single medicine"],
        [("treats", "type 2 diabetes mellitus")],
    ),
    (
        "basal insulin",
        ["long-acting insulin"],
        "drug",
        "Background insulin that works steadily for up to a day, covering the sugar the liver releases between meals and overnight.",
        [],
        [("subtype_of", "insulin")],
    ),
    (
        "rapid-acting insulin",
        ["mealtime insulin", "bolus insulin"],
        "drug",
        "Fast insulin injected just before eating to cover the rise from that meal. It starts in minutes and fades within hours.",
        [],
        [("subtype_of", "insulin")],
    ),
    (
        "time in range",
        [],
        "metric",
        "The share of the day a glucose sensor finds you between 3.9 and 10.0 mmol/L. Above 70 percent is a common goal.",
        ["often abbreviated TIR, which hides inside words like 'tired', so only the full name is matched"],
        [("measures", "type 2 diabetes mellitus")],
    ),
    (
        "body mass index",
        ["BMI"],
        "metric",
        "Weight in kilograms divided by height in meters squared. A rough but useful marker of weight-related diabetes risk.",
        [],
        [("measures", "obesity")],
    ),
    (
        "obesity",
        ["severe overweight"],
        "condition",
        "Body fat high enough to harm health. Losing even 5 to 10 percent of body weight clearly improves blood sugar control.",
        [],
        [("related_to", "type 2 diabetes mellitus")],
    ),
    (
        "glucose tablets",
        ["rescue sugar", "glucose gel"],
        "lifestyle",
        "Fast pure sugar carried for treating lows: take about 15 grams, wait 15 minutes, recheck. Chocolate is too slow for a rescue.",
        [],
        [("related_to", "hypoglycemia")],
    ),
    (
        "sick day plan",
        [],
        "lifestyle",
        "Written rules for managing diabetes during illness: keep taking medicine unless told otherwise, check sugar more often, drink fluids, and know when to call for help.",
        [],
        [("related_to", "type 2 diabetes mellitus")],
    ),
]


# Mechanical groups: (seed names, optional aliases keyed by name).
_DRUGS = [
    "glipizide", "gliclazide", "glibenclamide", "glimepiride", "sitagliptin",
    "saxagliptin", "vildagliptin", "linagliptin", "alogliptin", "empagliflozin",
    "dapagliflozin", "canagliflozin", "ertugliflozin", "liraglutide", "semaglutide",
    "dulaglutide", "exenatide", "acarbose", "voglibose", "miglitol",
    "pioglitazone", "rosiglitazone", "repaglinide", "nateglinide", "insulin glargine",
    "insulin detemir", "insulin degludec", "insulin aspart", "insulin lispro",
    "insulin glulisine", "regular human insulin", "NPH insulin", "premixed insulin 70/30",
    "aspirin", "atorvastatin", "simvastatin", "rosuvastatin", "losartan", "valsartan",
    "amlodipine", "enalapril", "metoprolol", "hydrochlorothiazide", "clopidogrel",
    "fenofibrate", "ezetimibe", "nifedipine", "telmisartan", "irbesartan", "captopril",
    "indapamide", "spironolactone", "furosemide", "gabapentin", "pregabalin",
    "duloxetine", "epalrestat", "alpha-lipoic acid", "calcium dobesilate",
]
_DRUG_ALIASES = {
    "glibenclamide": ["glyburide"],
    "insulin glargine": ["glargine"],
    "insulin aspart": ["aspart"],
    "insulin lispro": ["lispro"],
    "premixed insulin 70/30": ["premixed insulin", "70/30 insulin"],
    "acarbose": ["拜糖平"],
}
_DRUG_CLASS = {
    "glipizide": "sulfonylureas", "gliclazide": "sulfonylureas",
    "glibenclamide": "sulfonylureas", "glimepiride": "sulfonylureas",
    "sitagliptin": "DPP-4 inhibitors", "saxagliptin": "DPP-4 inhibitors",
    "vildagliptin": "DPP-4 inhibitors", "linagliptin": "DPP-4 inhibitors",
    "alogliptin": "DPP-4 inhibitors", "empagliflozin": "SGLT2 inhibitors",
    "dapagliflozin": "SGLT2 inhibitors", "canagliflozin": "SGLT2 inhibitors",
    "ertugliflozin": "SGLT2 inhibitors", "liraglutide": "GLP-1 receptor agonists",
    "semaglutide": "GLP-1 receptor agonists", "dulaglutide": "GLP-1 receptor agonists",
    "exenatide": "GLP-1 receptor agonists", "insulin glargine": "basal insulin",
    "insulin detemir": "basal insulin", "insulin degludec": "basal insulin",
    "insulin aspart": "rapid-acting insulin", "insulin lispro": "rapid-acting insulin",
    "insulin glulisine": "rapid-acting insulin",
}
# drugs that mainly treat companions of diabetes rather than blood sugar
_DRUG_TARGET = {
    "aspirin": "coronary heart disease", "atorvastatin": "hyperlipidemia",
    "simvastatin": "hyperlipidemia", "rosuvastatin": "hyperlipidemia",
    "losartan": "hypertension", "valsartan": "hypertension",
    "amlodipine": "hypertension", "enalapril": "hypertension",
    "metoprolol": "hypertension", "hydrochlorothiazide": "hypertension",
    "clopidogrel": "coronary heart disease", "fenofibrate": "hyperlipidemia",
    "ezetimibe": "hyperlipidemia", "nifedipine": "hypertension",
    "telmisartan": "hypertension", "irbesartan": "hypertension",
    "captopril": "hypertension", "indapamide": "hypertension",
    "spironolactone": "heart failure", "furosemide": "heart failure",
    "gabapentin": "diabetic neuropathy", "pregabalin": "diabetic neuropathy",
    "duloxetine": "diabetic neuropathy", "epalrestat": "diabetic neuropathy",
    "alpha-lipoic acid": "diabetic neuropathy", "calcium dobesilate": "diabetic retinopathy",
}

_CONDITIONS = [
    "coronary heart disease", "stroke", "metabolic syndrome", "fatty liver",
    "gastroparesis", "gum disease", "cataract", "glaucoma", "peripheral artery disease",
    "carotid plaque", "heart failure", "atrial fibrillation", "anemia", "gout",
    "osteoporosis", "sleep apnea", "thyroid nodule", "hypothyroidism", "hyperthyroidism",
    "cellulitis", "urinary tract infection", "oral thrush", "shingles", "frozen shoulder",
    "carpal tunnel syndrome", "trigger finger", "dawn phenomenon", "insulin allergy",
    "lipohypertrophy", "charcot foot", "erectile dysfunction disorder", "depression",
    "anxiety disorder", "dry eye disease", "macular edema", "vitreous hemorrhage",
    "ingrown toenail", "athlete's foot", "onychomycosis", "pancreatitis",
]
_CONDITION_ALIASES = {
    "gum disease": ["periodontitis"],
    "fatty liver": ["hepatic steatosis"],
    "oral thrush": ["oral candidiasis"],
    "sleep apnea": ["obstructive sleep apnea"],
    "onychomycosis": ["fungal nail infection"],
}

_SYMPTOMS = [
    "fatigue", "increased hunger", "unexplained weight loss", "tingling in hands",
    "slow wound healing", "dizziness", "shakiness", "palpitations", "dry mouth",
    "itchy skin", "recurrent infections", "leg cramps", "foot pain", "swollen ankles",
    "nausea", "vomiting", "constipation", "diarrhea", "headache", "irritability",
    "confusion", "fainting", "chest tightness", "shortness of breath", "insomnia",
    "snoring", "daytime sleepiness", "mood swings", "burning feet", "restless legs",
    "night sweats", "dry eyes", "eye floaters", "double vision", "ringing in ears",
    "hair thinning", "brittle nails", "skin darkening", "gum bleeding", "bad breath",
    "urinary urgency", "nighttime urination", "muscle weakness", "joint stiffness",
    "back pain", "knee pain", "loss of balance", "memory trouble", "cold feet",
    "blisters on feet",
]
_SYMPTOM_ALIASES = {
    "increased hunger": ["polyphagia"],
    "nighttime urination": ["nocturia"],
    "skin darkening": ["acanthosis nigricans"],
    "tingling in hands": ["pins and needles"],
}
# symptoms that belong to a specific condition instead of the default
_SYMPTOM_OF = {
    "shakiness": "hypoglycemia", "palpitations": "hypoglycemia",
    "confusion": "hypoglycemia", "fainting": "hypoglycemia",
    "dizziness": "hypoglycemia", "irritability": "hypoglycemia",
    "burning feet": "diabetic neuropathy", "foot pain": "diabetic neuropathy",
    "loss of balance": "diabetic neuropathy", "cold feet": "peripheral artery disease",
    "blisters on feet": "diabetic foot ulcer", "eye floaters": "diabetic retinopathy",
    "double vision": "diabetic retinopathy", "swollen ankles": "diabetic nephropathy",
    "snoring": "sleep apnea", "daytime sleepiness": "sleep apnea",
    "chest tightness": "coronary heart disease", "shortness of breath": "heart failure",
    "gum bleeding": "gum disease", "bad breath": "gum disease",
    "urinary urgency": "urinary tract infection",
}

_METRICS = [
    "random blood glucose", "bedtime blood glucose", "pre-meal blood glucose",
    "dawn blood glucose", "estimated average glucose", "glucose variability",
    "fructosamine", "blood pressure", "systolic blood pressure", "diastolic blood pressure",
    "resting heart rate", "body weight", "waist circumference", "body fat percentage",
    "total cholesterol", "LDL cholesterol", "HDL cholesterol", "triglycerides",
    "serum creatinine", "estimated glomerular filtration rate", "urine albumin",
    "urine albumin-to-creatinine ratio", "blood ketones", "urine ketones", "C-peptide",
    "fasting insulin level", "uric acid", "alanine aminotransferase",
    "aspartate aminotransferase", "hemoglobin level", "thyroid stimulating hormone",
    "vitamin D level", "blood oxygen saturation", "daily step count", "sleep duration",
    "carbohydrate intake", "calorie intake", "weekly exercise minutes",
    "total daily insulin dose",
]
# matching is boundary-free (Chinese-first), so ultra-short Latin aliases
# that hide inside everyday words (ALT in "although", AST in "last") stay out
_METRIC_ALIASES = {
    "estimated glomerular filtration rate": ["eGFR"],
    "urine albumin-to-creatinine ratio": ["UACR"],
    "LDL cholesterol": ["bad cholesterol"],
    "HDL cholesterol": ["good cholesterol"],
    "thyroid stimulating hormone": ["TSH"],
    "blood pressure": ["血压"],
}
_METRIC_TARGET = {
    "blood pressure": "hypertension", "systolic blood pressure": "hypertension",
    "diastolic blood pressure": "hypertension", "total cholesterol": "hyperlipidemia",
    "LDL cholesterol": "hyperlipidemia", "HDL cholesterol": "hyperlipidemia",
    "triglycerides": "hyperlipidemia", "serum creatinine": "chronic kidney disease",
    "estimated glomerular filtration rate": "chronic kidney disease",
    "urine albumin": "diabetic nephropathy",
    "urine albumin-to-creatinine ratio": "diabetic nephropathy",
    "body weight": "obesity", "waist circumference": "obesity",
    "body fat percentage": "obesity", "uric acid": "gout",
    "thyroid stimulating hormone": "hypothyroidism",
}

_PROCEDURES = [
    "HbA1c test", "dilated eye exam", "foot examination", "monofilament test",
    "ankle-brachial index", "electrocardiogram", "echocardiogram", "lipid panel",
    "kidney function panel", "insulin injection", "insulin pump therapy",
    "dietary counseling", "diabetes self-management education", "flu vaccination",
    "dental cleaning", "weight management program", "bariatric surgery", "dialysis",
    "retinal laser treatment", "cataract surgery", "wound debridement",
    "medication review", "annual physical exam", "carotid ultrasound",
    "nerve conduction study", "urine test", "liver ultrasound", "retinal photography",
    "blood draw", "home blood pressure measurement", "toenail care visit",
    "physiotherapy session", "acupuncture", "telehealth consultation",
    "insulin pen", "insulin syringe", "pen needle", "lancet", "test strip",
    "glucose meter", "insulin storage", "sharps disposal",
]
_PROCEDURE_ALIASES = {
    "dilated eye exam": ["fundus examination"],
    "electrocardiogram": ["ECG", "EKG"],
    "insulin pen": ["pen injector"],
    "glucose meter": ["glucometer", "血糖仪"],
}
_PROCEDURE_TARGET = {
    "dilated eye exam": "diabetic retinopathy", "retinal laser treatment": "diabetic retinopathy",
    "retinal photography": "diabetic retinopathy", "cataract surgery": "cataract",
    "foot examination": "diabetic foot ulcer", "monofilament test": "diabetic neuropathy",
    "nerve conduction study": "diabetic neuropathy", "wound debridement": "diabetic foot ulcer",
    "ankle-brachial index": "peripheral artery disease", "dialysis": "chronic kidney disease",
    "kidney function panel": "chronic kidney disease", "lipid panel": "hyperlipidemia",
    "electrocardiogram": "coronary heart disease", "echocardiogram": "heart failure",
    "carotid ultrasound": "carotid plaque", "bariatric surgery": "obesity",
    "weight management program": "obesity", "liver ultrasound": "fatty liver",
    "dental cleaning": "gum disease", "home blood pressure measurement": "hypertension",
    "toenail care visit": "ingrown toenail",
}

_LIFESTYLE = [
    "portion control", "meal timing", "whole grain foods", "dietary fiber",
    "added sugar", "salt restriction", "healthy fats", "brisk walking", "tai chi",
    "square dancing", "cycling", "swimming", "stretching", "sleep hygiene",
    "stress management", "smoking cessation", "alcohol moderation", "foot care routine",
    "drinking enough water", "glycemic load", "eating vegetables first",
    "resistant starch", "late-night snacking", "skipping breakfast", "food diary",
    "reading nutrition labels", "cooking oil choice", "steaming instead of frying",
    "soup before the meal", "weighing food portions", "jogging", "hiking", "badminton",
    "table tennis", "basketball", "yoga", "gardening", "dancing", "jump rope",
    "stair climbing", "treadmill walking", "rowing machine", "glucose log book",
    "medication organizer box", "pill reminder alarm", "travel medication kit",
    "medical ID bracelet", "emergency contact card", "blood pressure diary",
    "weight diary", "foot mirror check", "shoe fitting", "hypoglycemia rescue snack",
]
_LIFESTYLE_ALIASES = {
    "square dancing": ["plaza dancing", "广场舞"],
    "tai chi": ["taiji", "太极拳"],
    "brisk walking": ["fast walking", "快走"],
}

_FRUITS = [
    "apple", "pear", "orange", "mandarin", "grapefruit", "pomelo", "banana", "grape",
    "watermelon", "cantaloupe", "honeydew melon", "peach", "nectarine", "plum",
    "apricot", "cherry", "strawberry", "blueberry", "raspberry", "blackberry",
    "kiwi fruit", "mango", "pineapple", "papaya", "lychee", "longan", "jujube",
    "persimmon", "pomegranate", "dragon fruit", "durian", "jackfruit", "hawthorn",
    "sugarcane", "coconut", "lemon", "mulberry", "loquat", "fig", "guava",
    "starfruit", "bayberry",
]
_VEGETABLES = [
    "bitter melon", "cucumber", "tomato", "spinach", "celery", "broccoli",
    "cauliflower", "cabbage", "chinese cabbage", "bok choy", "lettuce", "eggplant",
    "zucchini", "winter melon", "luffa", "green beans", "snow peas", "edamame",
    "bean sprouts", "carrot", "white radish", "lotus root", "taro", "potato",
    "sweet potato", "purple yam", "pumpkin", "sweet corn", "onion", "garlic",
    "ginger", "scallion", "leek", "chives", "button mushroom", "shiitake mushroom",
    "wood ear fungus", "kelp", "nori seaweed", "okra", "asparagus", "bell pepper",
]
_STAPLES = [
    "white rice", "brown rice", "black rice", "millet porridge", "rice porridge",
    "steamed bun", "whole wheat bread", "white bread", "wheat noodles", "rice noodles",
    "buckwheat noodles", "oatmeal", "rolled oats", "quinoa", "barley", "cornmeal porridge",
    "dumplings", "glutinous rice", "sticky rice cake", "mooncake", "fried rice",
    "fried noodles", "scallion pancake", "flatbread", "sweet potato noodles",
    "mung beans", "red beans", "black beans", "chickpeas", "tofu", "soy milk",
    "eight-treasure porridge", "zongzi", "tangyuan", "wonton soup", "fried dough stick",
]
_STAPLE_ALIASES = {
    "rice porridge": ["congee", "白粥"],
    "steamed bun": ["mantou"],
    "fried dough stick": ["youtiao"],
    "dumplings": ["jiaozi"],
}
_TREATS_AND_DRINKS = [
    "sugary soda", "fruit juice", "milk tea", "bubble tea", "honey", "white sugar",
    "brown sugar", "rock sugar", "hard candy", "chocolate", "biscuits", "sponge cake",
    "ice cream", "plain yogurt", "sweetened yogurt", "plain milk", "green tea",
    "black tea", "coffee", "diet soda", "sports drink", "beer", "rice wine",
    "distilled liquor", "mixed nuts", "walnuts", "almonds", "peanuts",
    "sunflower seeds", "potato chips", "preserved fruit", "salted duck egg",
    "century egg", "pickled vegetables",
]
_DISHES = [
    "hot pot", "braised pork belly", "spring rolls", "soy sauce chicken",
    "steamed fish", "tomato and egg stir-fry", "mapo tofu", "kung pao chicken",
    "sweet and sour pork", "twice-cooked pork", "beef noodle soup", "lamb skewers",
    "hot dry noodles", "braised eggplant", "egg fried rice", "claypot rice",
    "stir-fried greens", "steamed egg custard", "cold cucumber salad",
    "seaweed egg drop soup", "chicken congee", "pork bone soup", "fish head soup",
    "sesame paste noodles",
]

# starchy vegetables get the staple-style warning instead of the default
_STARCHY = {"potato", "sweet potato", "purple yam", "pumpkin", "sweet corn", "taro", "lotus root"}
_SUGARY_FRUIT = {
    "banana", "grape", "lychee", "longan", "jujube", "persimmon", "durian",
    "sugarcane", "jackfruit", "mango", "pineapple", "fig",
}


def _curated_nodes() -> list[dict]:
    out = []
    for canonical, aliases, category, explanation, cues, edges in _CURATED:
        out.append(
            {
                "id": "c-" + _slug(canonical),
                "canonical": canonical,
                "aliases": aliases,
                "category": category,
                "explanation": explanation,
                "cues": cues,
                "edges": edges,
            }
        )
    return out


def _group_nodes() -> list[dict]:
    out = []

    def add(prefix, canonical, category, explanation, aliases=(), edges=()):
        out.append(
            {
                "id": f"{prefix}-{_slug(canonical)}",
                "canonical": canonical,
                "aliases": list(aliases),
                "category": category,
                "explanation": explanation,
                "cues": [],
                "edges": list(edges),
            }
        )

    for name in _DRUGS:
        target = _DRUG_TARGET.get(name, "type 2 diabetes mellitus")
        edges = [("treats", target)]
        if name in _DRUG_CLASS:
            edges.append(("subtype_of", _DRUG_CLASS[name]))
        if name in _DRUG_CLASS and _DRUG_CLASS[name] == "sulfonylureas":
            explanation = (
                f"{name.capitalize()} is a tablet that prompts the pancreas to release more insulin. "
                "It can cause low blood sugar if a meal is skipped, so keep meals regular."
            )
        elif target == "type 2 diabetes mellitus":
            explanation = (
                f"{name.capitalize()} is a medicine used to lower blood sugar in type 2 diabetes. "
                "Take it the way it was prescribed and mention side effects at your next visit."
            )
        else:
            explanation = (
                f"{name.capitalize()} is a medicine often prescribed alongside diabetes care to manage {target}. "
                "It does not replace blood sugar medicine."
            )
        add("drug", name, "drug", explanation, _DRUG_ALIASES.get(name, ()), edges)

    for name in _CONDITIONS:
        add(
            "cond",
            name,
            "condition",
            f"{name.capitalize()} is a health condition that people with diabetes should know about, "
            "because diabetes makes it more likely or harder to treat. Ask your care team how it applies to you.",
            _CONDITION_ALIASES.get(name, ()),
            [("related_to", "type 2 diabetes mellitus")],
        )

    for name in _SYMPTOMS:
        target = _SYMPTOM_OF.get(name, "type 2 diabetes mellitus")
        add(
            "sym",
            name,
            "symptom",
            f"{name.capitalize()} is a symptom worth recording in your daily log. "
            "If it is new, keeps returning, or gets worse, bring it up with your doctor.",
            _SYMPTOM_ALIASES.get(name, ()),
            [("symptom_of", target)],
        )

    for name in _METRICS:
        target = _METRIC_TARGET.get(name, "type 2 diabetes mellitus")
        add(
            "met",
            name,
            "metric",
            f"{name.capitalize()} is a number your care team tracks over time. "
            "One reading rarely matters by itself; the trend is what guides treatment.",
            _METRIC_ALIASES.get(name, ()),
            [("measures", target)],
        )

    for name in _PROCEDURES:
        target = _PROCEDURE_TARGET.get(name, "type 2 diabetes mellitus")
        add(
            "proc",
            name,
            "procedure",
            f"{name.capitalize()} is part of routine diabetes care. "
            "Knowing what it is for makes the visit faster and less stressful.",
            _PROCEDURE_ALIASES.get(name, ()),
            [("related_to", target)],
        )

    for name in _LIFESTYLE:
        add(
            "life",
            name,
            "lifestyle",
            f"{name.capitalize()} is a self-care habit that supports steady blood sugar. "
            "Small, repeatable changes beat big short-lived ones.",
            _LIFESTYLE_ALIASES.get(name, ()),
            [("related_to", "type 2 diabetes mellitus")],
        )

    for name in _FRUITS:
        if name in _SUGARY_FRUIT:
            explanation = (
                f"{name.capitalize()} is a fruit on the sweeter side. A small portion between meals is "
                "usually fine; check your after-meal reading to see how it lands for you."
            )
        else:
            explanation = (
                f"{name.capitalize()} is a fruit most people with diabetes can enjoy in modest portions, "
                "ideally between meals rather than right after one."
            )
        add("food", name, "lifestyle", explanation, (), [("related_to", "low glycemic index diet")])

    for name in _VEGETABLES:
        if name in _STARCHY:
            explanation = (
                f"{name.capitalize()} is a starchy vegetable: it counts toward your staple-food portion, "
                "so swap it for some rice or noodles rather than adding it on top."
            )
        else:
            explanation = (
                f"{name.capitalize()} is a non-starchy vegetable; generous portions help fill the plate "
                "without pushing blood sugar up."
            )
        add("food", name, "lifestyle", explanation, (), [("related_to", "low glycemic index diet")])

    for name in _STAPLES:
        add(
            "food",
            name,
            "lifestyle",
            f"{name.capitalize()} is a staple food. Staples are the main driver of after-meal blood sugar, "
            "so watch the portion and prefer whole-grain versions when you can.",
            _STAPLE_ALIASES.get(name, ()),
            [("related_to", "carbohydrate counting")],
        )

    for name in _TREATS_AND_DRINKS:
        add(
            "food",
            name,
            "lifestyle",
            f"{name.capitalize()} is an occasional treat at best when managing blood sugar. "
            "If you have it, keep the portion small and take a walk after.",
            (),
            [("related_to", "added sugar")],
        )

    for name in _DISHES:
        add(
            "food",
            name,
            "lifestyle",
            f"{name.capitalize()} is a common dish. Mind the hidden oil, sugar and starch in the sauce, "
            "and balance the plate with vegetables.",
            (),
            [("related_to", "portion control")],
        )

    return out


def _all_nodes() -> list[dict]:
    nodes = _curated_nodes() + _group_nodes()
    seen: dict[str, dict] = {}
    for node in nodes:
        if node["id"] in seen:
            raise ValueError(f"fixture id collision: {node['id']}")
        if not fold_text(node["canonical"]):
            raise ValueError(f"surface folds to empty: {node['canonical']!r}")
        seen[node["id"]] = node
    return nodes


def generate_fixture_document() -> str:
    """Render the fixture graph in the line-delimited document format."""
    nodes = _all_nodes()
    by_canonical = {n["canonical"]: n["id"] for n in nodes}
    lines = ["# carebridge fixture graph (generated; do not edit by hand)"]
    for n in nodes:
        fields = [
            "N",
            n["id"],
            n["canonical"],
            "|".join([n["canonical"], *n["aliases"]]),
            n["category"],
            n["explanation"],
        ]
        if n["cues"]:
            fields.append("|".join(n["cues"]))
        lines.append("\t".join(fields))
    for n in nodes:
        for relation, target_canonical in n["edges"]:
            target = by_canonical.get(target_canonical)
            if target is None:
                raise ValueError(f"edge target not in fixture: {target_canonical!r}")
            lines.append("\t".join(["E", n["id"], relation, target]))
    return "\n".join(lines) + "\n"


def fixture_graph() -> KnowledgeGraph:
    """Load the committed fixture document shipped as package data."""
    text = resources.files(_DATA_PACKAGE).joinpath(_DATA_NAME).read_text(encoding="utf-8")
    return load_graph(text)


if __name__ == "__main__":
    import sys

    sys.stdout.write(generate_fixture_document())
