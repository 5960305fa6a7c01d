#!/usr/bin/env python3
"""Regenerates data/samples/handtagged_200.tsv from the inline gold standard.

Each sentence is written as space-separated word_TAG items. The script
validates tags against the library tag set and emits token<TAB>tag lines
with a blank line between sentences.

Run from the repository root:  python3 scripts/gen_handtagged_sample.py
"""

TAG_SET = {
    "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD",
    "NN", "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR",
    "RBS", "RP", "SYM", "TO", "UH", "VB", "VBD", "VBG", "VBN", "VBP",
    "VBZ", "WDT", "WP", "WP$", "WRB",
    ".", ",", ":", "(", ")", "``", "''", "$", "#",
}

SENTENCES = [
    # --- encyclopedic register ---
    "The_DT city_NN of_IN Florence_NNP is_VBZ located_VBN in_IN central_JJ Italy_NNP ._.",
    "Photosynthesis_NN is_VBZ the_DT process_NN by_IN which_WDT plants_NNS convert_VBP light_NN into_IN energy_NN ._.",
    "The_DT river_NN runs_VBZ through_IN several_JJ regions_NNS before_IN reaching_VBG the_DT sea_NN ._.",
    "Many_JJ species_NNS of_IN birds_NNS migrate_VBP to_TO warmer_JJR climates_NNS during_IN the_DT winter_NN ._.",
    "The_DT university_NN was_VBD founded_VBN in_IN 1209_CD and_CC has_VBZ grown_VBN steadily_RB since_IN then_RB ._.",
    "Its_PRP$ economy_NN depends_VBZ largely_RB on_IN tourism_NN and_CC agriculture_NN ._.",
    "The_DT ancient_JJ walls_NNS still_RB surround_VBP the_DT old_JJ town_NN ._.",
    "Scientists_NNS have_VBP identified_VBN thousands_NNS of_IN new_JJ species_NNS in_IN the_DT region_NN ._.",
    "The_DT castle_NN ,_, which_WDT dates_VBZ from_IN 1150_CD ,_, attracts_VBZ many_JJ visitors_NNS ._.",
    "Water_NN occupies_VBZ most_JJS of_IN the_DT planet_NN 's_POS surface_NN ._.",
    "In_IN recent_JJ years_NNS ,_, the_DT island_NN has_VBZ become_VBN a_DT popular_JJ destination_NN for_IN tourists_NNS ._.",
    "The_DT local_JJ government_NN has_VBZ invested_VBN heavily_RB in_IN renewable_JJ energy_NN ._.",
    "Researchers_NNS study_VBP the_DT effects_NNS of_IN climate_NN change_NN on_IN crops_NNS ._.",
    "The_DT museum_NN holds_VBZ one_CD of_IN the_DT largest_JJS collections_NNS in_IN Europe_NNP ._.",
    "Farmers_NNS in_IN the_DT valley_NN grow_VBP rice_NN and_CC vegetables_NNS ._.",
    "The_DT bridge_NN connects_VBZ the_DT old_JJ town_NN with_IN the_DT modern_JJ district_NN ._.",
    "Heavy_JJ rain_NN caused_VBD severe_JJ floods_NNS in_IN the_DT southern_JJ provinces_NNS ._.",
    "The_DT report_NN was_VBD written_VBN and_CC reviewed_VBN by_IN independent_JJ experts_NNS ._.",
    "Construction_NN of_IN the_DT new_JJ stadium_NN began_VBD in_IN 2019_CD ._.",
    "The_DT company_NN employs_VBZ about_RB 3000_CD workers_NNS ._.",
    "Critics_NNS argue_VBP that_IN the_DT policy_NN ignores_VBZ rural_JJ communities_NNS ._.",
    "Supporters_NNS claim_VBP the_DT reform_NN will_MD reduce_VB costs_NNS ._.",
    "The_DT survey_NN shows_VBZ that_IN most_JJS students_NNS prefer_VBP online_JJ courses_NNS ._.",
    "Unemployment_NN remains_VBZ high_JJ despite_IN recent_JJ growth_NN ._.",
    "The_DT law_NN requires_VBZ companies_NNS to_TO publish_VB annual_JJ reports_NNS ._.",
    "Climate_NN change_NN threatens_VBZ coastal_JJ cities_NNS around_IN the_DT world_NN ._.",
    "The_DT artist_NN spent_VBD several_JJ years_NNS in_IN Paris_NNP before_IN returning_VBG to_TO France_NNP ._.",
    "Tourism_NN provides_VBZ nearly_RB half_PDT of_IN the_DT region_NN 's_POS income_NN ._.",
    "The_DT committee_NN approved_VBD the_DT proposal_NN after_IN a_DT long_JJ debate_NN ._.",
    "Ancient_JJ manuscripts_NNS are_VBP preserved_VBN in_IN the_DT national_JJ library_NN ._.",
    "The_DT mountain_NN range_NN forms_VBZ a_DT natural_JJ border_NN between_IN the_DT two_CD countries_NNS ._.",
    "Modern_JJ hospitals_NNS rely_VBP on_IN advanced_JJ equipment_NN and_CC trained_VBN staff_NN ._.",
    "The_DT population_NN has_VBZ doubled_VBN since_IN the_DT 1950s_CD ._.",
    "Local_JJ markets_NNS sell_VBP fresh_JJ fruit_NN ,_, fish_NN ,_, and_CC bread_NN ._.",
    "The_DT original_JJ building_NN was_VBD destroyed_VBN by_IN fire_NN in_IN 1666_CD ._.",
    "Archaeologists_NNS discovered_VBD tools_NNS that_WDT are_VBP over_IN 5000_CD years_NNS old_JJ ._.",
    "The_DT harbor_NN serves_VBZ as_IN a_DT major_JJ center_NN for_IN trade_NN ._.",
    "Forests_NNS cover_VBP nearly_RB a_DT third_JJ of_IN the_DT country_NN ._.",
    "The_DT festival_NN celebrates_VBZ traditional_JJ music_NN and_CC dance_NN ._.",
    "Railways_NNS transformed_VBD the_DT economy_NN during_IN the_DT nineteenth_JJ century_NN ._.",
    # --- essay register ---
    "I_PRP believe_VBP that_IN education_NN is_VBZ the_DT foundation_NN of_IN a_DT fair_JJ society_NN ._.",
    "Students_NNS should_MD learn_VB how_WRB to_TO manage_VB their_PRP$ own_JJ money_NN ._.",
    "This_DT argument_NN seems_VBZ convincing_JJ at_IN first_JJ glance_NN ._.",
    "However_RB ,_, the_DT evidence_NN suggests_VBZ a_DT different_JJ conclusion_NN ._.",
    "We_PRP cannot_MD ignore_VB the_DT impact_NN of_IN technology_NN on_IN our_PRP$ daily_JJ lives_NNS ._.",
    "People_NNS often_RB say_VBP that_IN money_NN cannot_MD buy_VB happiness_NN ._.",
    "It_PRP is_VBZ clear_JJ that_IN the_DT government_NN must_MD act_VB quickly_RB ._.",
    "There_EX are_VBP several_JJ reasons_NNS why_WRB this_DT policy_NN failed_VBD ._.",
    "My_PRP$ grandmother_NN taught_VBD me_PRP the_DT value_NN of_IN hard_JJ work_NN ._.",
    "They_PRP had_VBD finished_VBN the_DT project_NN before_IN the_DT deadline_NN ._.",
    "Some_DT people_NNS argue_VBP that_IN social_JJ media_NNS hurts_VBZ young_JJ minds_NNS ._.",
    "Others_NNS insist_VBP that_IN technology_NN affects_VBZ how_WRB we_PRP think_VBP ._.",
    "In_IN my_PRP$ opinion_NN ,_, schools_NNS focus_VBP too_RB much_JJ on_IN testing_NN ._.",
    "Every_DT child_NN deserves_VBZ access_NN to_TO quality_NN education_NN ._.",
    "Hard_JJ work_NN does_VBZ not_RB always_RB guarantee_VB success_NN ._.",
    "Universities_NNS must_MD prepare_VB students_NNS for_IN a_DT changing_VBG world_NN ._.",
    "Parents_NNS worry_VBP about_IN the_DT amount_NN of_IN time_NN children_NNS spend_VBP on_IN screens_NNS ._.",
    "A_DT balanced_JJ approach_NN would_MD serve_VB everyone_NN well_RB ._.",
    "The_DT evidence_NN suggests_VBZ that_IN small_JJ classes_NNS improve_VBP learning_NN ._.",
    "First_RB ,_, governments_NNS should_MD invest_VB in_IN public_JJ transport_NN ._.",
    "Second_RB ,_, schools_NNS need_VBP more_JJR funding_NN for_IN science_NN programs_NNS ._.",
    "Finally_RB ,_, parents_NNS must_MD support_VB teachers_NNS at_IN home_NN ._.",
    "Critics_NNS of_IN this_DT view_NN ignore_VBP several_JJ important_JJ facts_NNS ._.",
    "The_DT data_NNS show_VBP a_DT steady_JJ decline_NN in_IN reading_NN scores_NNS ._.",
    "A_DT shorter_JJR school_NN week_NN could_MD improve_VB student_NN motivation_NN ._.",
    "Opponents_NNS fear_VBP that_IN the_DT change_NN would_MD lower_VB standards_NNS ._.",
    "Such_JJ policies_NNS often_RB create_VBP more_JJR problems_NNS than_IN they_PRP solve_VBP ._.",
    "Everyone_NN agrees_VBZ that_IN health_NN care_NN should_MD remain_VB affordable_JJ ._.",
    "The_DT real_JJ question_NN is_VBZ whether_IN voters_NNS will_MD accept_VB higher_JJR taxes_NNS ._.",
    "History_NN teaches_VBZ us_PRP that_IN progress_NN requires_VBZ sacrifice_NN ._.",
    "Young_JJ people_NNS today_RB face_VBP pressures_NNS that_IN their_PRP$ parents_NNS never_RB knew_VBD ._.",
    "We_PRP should_MD judge_VB a_DT society_NN by_IN how_WRB it_PRP treats_VBZ its_PRP$ weakest_JJS members_NNS ._.",
    "Freedom_NN of_IN speech_NN remains_VBZ a_DT cornerstone_NN of_IN democracy_NN ._.",
    "It_PRP is_VBZ tempting_JJ to_TO blame_VB technology_NN for_IN these_DT problems_NNS ._.",
    "Nevertheless_RB ,_, the_DT benefits_NNS clearly_RB outweigh_VBP the_DT risks_NNS ._.",
    "A_DT good_JJ teacher_NN can_MD change_VB a_DT student_NN 's_POS life_NN ._.",
    "Many_JJ young_JJ graduates_NNS struggle_VBP to_TO find_VB stable_JJ jobs_NNS ._.",
    "The_DT argument_NN rests_VBZ on_IN a_DT false_JJ assumption_NN ._.",
    "Companies_NNS should_MD pay_VB workers_NNS a_DT living_JJ wage_NN ._.",
    "What_WP can_MD we_PRP learn_VB from_IN history_NN ?_.",
    # --- perfects, passives, modals, narrative ---
    "She_PRP has_VBZ eaten_VBN ,_, and_CC he_PRP left_VBD ._.",
    "The_DT results_NNS have_VBP been_VBN published_VBN in_IN a_DT leading_VBG journal_NN ._.",
    "He_PRP was_VBD elected_VBN president_NN in_IN a_DT close_JJ contest_NN ._.",
    "The_DT old_JJ theater_NN has_VBZ been_VBN restored_VBN to_TO its_PRP$ former_JJ glory_NN ._.",
    "By_IN 1900_CD ,_, the_DT railway_NN had_VBD reached_VBN the_DT coast_NN ._.",
    "The_DT new_JJ rules_NNS were_VBD announced_VBN yesterday_RB ._.",
    "Nothing_NN could_MD have_VB prepared_VBN them_PRP for_IN the_DT storm_NN ._.",
    "The_DT suspect_NN was_VBD arrested_VBN and_CC charged_VBN with_IN fraud_NN ._.",
    "Wages_NNS have_VBP risen_VBN faster_RBR than_IN prices_NNS ._.",
    "The_DT plan_NN was_VBD quietly_RB abandoned_VBN after_IN the_DT election_NN ._.",
    "He_PRP had_VBD never_RB seen_VBN such_PDT a_DT crowd_NN before_RB ._.",
    "The_DT painting_NN was_VBD sold_VBN for_IN a_DT record_NN price_NN ._.",
    "Most_JJS of_IN the_DT forest_NN has_VBZ already_RB been_VBN cleared_VBN ._.",
    "The_DT committee_NN has_VBZ not_RB yet_RB made_VBN a_DT decision_NN ._.",
    "Several_JJ witnesses_NNS were_VBD interviewed_VBN by_IN the_DT police_NN ._.",
    "The_DT vaccine_NN has_VBZ saved_VBN millions_NNS of_IN lives_NNS ._.",
    "The_DT letter_NN had_VBD been_VBN written_VBN decades_NNS earlier_RBR ._.",
    "The_DT fire_NN spread_VBD quickly_RB through_IN the_DT dry_JJ hills_NNS ._.",
    "She_PRP opened_VBD the_DT window_NN and_CC looked_VBD at_IN the_DT quiet_JJ street_NN ._.",
    "The_DT travelers_NNS reached_VBD the_DT village_NN just_RB before_IN dark_NN ._.",
    "He_PRP picked_VBD up_RP the_DT letter_NN and_CC read_VBD it_PRP twice_RB ._.",
    "The_DT children_NNS laughed_VBD and_CC ran_VBD toward_IN the_DT water_NN ._.",
    "Nobody_NN knew_VBD why_WRB the_DT old_JJ man_NN had_VBD returned_VBN ._.",
    "The_DT soldiers_NNS marched_VBD for_IN three_CD days_NNS without_IN rest_NN ._.",
    "She_PRP told_VBD her_PRP$ story_NN slowly_RB ,_, choosing_VBG every_DT word_NN with_IN care_NN ._.",
    "The_DT crowd_NN cheered_VBD when_WRB the_DT team_NN finally_RB scored_VBD ._.",
    "It_PRP rained_VBD all_DT night_NN ,_, and_CC the_DT river_NN rose_VBD quickly_RB ._.",
    "He_PRP wanted_VBD to_TO explain_VB ,_, but_CC nobody_NN listened_VBD ._.",
    "The_DT letter_NN arrived_VBD two_CD weeks_NNS after_IN his_PRP$ death_NN ._.",
    "They_PRP walked_VBD home_NN in_IN silence_NN ._.",
    # --- existentials, demonstratives, questions, misc structures ---
    "There_EX is_VBZ a_DT simple_JJ solution_NN to_TO this_DT problem_NN ._.",
    "There_EX were_VBD no_DT easy_JJ answers_NNS at_IN that_DT time_NN ._.",
    "This_DT is_VBZ the_DT most_RBS important_JJ lesson_NN of_IN all_DT ._.",
    "Those_DT who_WP work_VBP hardest_RBS often_RB gain_VBP the_DT least_JJS ._.",
    "That_DT idea_NN deserves_VBZ serious_JJ attention_NN ._.",
    "These_DT findings_NNS support_VBP the_DT original_JJ hypothesis_NN ._.",
    "Why_WRB do_VBP so_RB many_JJ projects_NNS fail_VB ?_.",
    "How_WRB should_MD we_PRP measure_VB success_NN ?_.",
    "Which_WDT factors_NNS matter_VBP most_RBS in_IN early_JJ childhood_NN ?_.",
    "Who_WP decides_VBZ what_WP counts_VBZ as_IN fair_JJ play_NN ?_.",
    "Do_VBP they_PRP understand_VB the_DT risks_NNS ?_.",
    "Not_RB every_DT tradition_NN deserves_VBZ to_TO survive_VB ._.",
    "Here_RB ,_, the_DT author_NN makes_VBZ a_DT crucial_JJ mistake_NN ._.",
    "Neither_DT side_NN was_VBD willing_JJ to_TO compromise_VB ._.",
    "Both_DT parties_NNS share_VBP responsibility_NN for_IN the_DT crisis_NN ._.",
    "Each_DT chapter_NN examines_VBZ a_DT different_JJ period_NN ._.",
    "Almost_RB nobody_NN predicted_VBD the_DT outcome_NN ._.",
    "Only_RB a_DT few_JJ students_NNS completed_VBD the_DT assignment_NN ._.",
    "Even_RB small_JJ changes_NNS can_MD make_VB a_DT real_JJ difference_NN ._.",
    "Perhaps_RB the_DT answer_NN lies_VBZ somewhere_RB in_IN between_IN ._.",
    # --- relatives, subordination, coordination ---
    "The_DT scientist_NN who_WP led_VBD the_DT team_NN won_VBD a_DT major_JJ award_NN ._.",
    "The_DT book_NN that_WDT changed_VBD my_PRP$ mind_NN was_VBD written_VBN in_IN 1962_CD ._.",
    "The_DT city_NN where_WRB she_PRP grew_VBD up_RP has_VBZ changed_VBN beyond_IN recognition_NN ._.",
    "Students_NNS whose_WP$ parents_NNS read_VBP to_TO them_PRP perform_VBP better_RBR in_IN school_NN ._.",
    "Although_IN the_DT experiment_NN failed_VBD ,_, the_DT team_NN learned_VBD valuable_JJ lessons_NNS ._.",
    "Because_IN the_DT roads_NNS were_VBD flooded_VBN ,_, the_DT match_NN was_VBD canceled_VBN ._.",
    "If_IN we_PRP act_VBP now_RB ,_, we_PRP can_MD still_RB prevent_VB the_DT worst_JJS ._.",
    "While_IN some_DT doubt_VBP the_DT findings_NNS ,_, most_JJS experts_NNS accept_VBP them_PRP ._.",
    "Unless_IN funding_NN increases_VBZ ,_, the_DT program_NN will_MD close_VB next_JJ year_NN ._.",
    "Since_IN the_DT factory_NN closed_VBD ,_, the_DT town_NN has_VBZ struggled_VBN ._.",
    "The_DT plan_NN sounded_VBD reasonable_JJ ,_, but_CC it_PRP proved_VBD impossible_JJ ._.",
    "She_PRP studied_VBD law_NN ,_, and_CC her_PRP$ brother_NN became_VBD a_DT doctor_NN ._.",
    "The_DT job_NN demands_VBZ patience_NN ,_, skill_NN ,_, and_CC a_DT sense_NN of_IN humor_NN ._.",
    "He_PRP neither_RB apologized_VBD nor_CC explained_VBD ._.",
    "The_DT team_NN worked_VBD through_IN the_DT night_NN to_TO meet_VB the_DT deadline_NN ._.",
    "Reading_VBG widely_RB improves_VBZ both_DT vocabulary_NN and_CC judgment_NN ._.",
    "By_IN studying_VBG past_JJ failures_NNS ,_, engineers_NNS design_VBP safer_JJR systems_NNS ._.",
    "Walking_VBG to_TO work_VB saves_VBZ money_NN and_CC improves_VBZ health_NN ._.",
    "The_DT committee_NN considered_VBD raising_VBG taxes_NNS on_IN imported_VBN goods_NNS ._.",
    "Having_VBG lost_VBN the_DT first_JJ game_NN ,_, the_DT team_NN changed_VBD its_PRP$ strategy_NN ._.",
    # --- gerunds, infinitives, comparatives ---
    "The_DT building_NN of_IN the_DT canal_NN took_VBD nearly_RB twenty_CD years_NNS ._.",
    "Saving_VBG money_NN is_VBZ harder_JJR than_IN spending_VBG it_PRP ._.",
    "His_PRP$ greatest_JJS achievement_NN was_VBD the_DT founding_NN of_IN the_DT academy_NN ._.",
    "To_TO succeed_VB ,_, one_PRP must_MD first_RB learn_VB to_TO fail_VB ._.",
    "The_DT goal_NN is_VBZ to_TO reduce_VB waste_NN by_IN 2030_CD ._.",
    "It_PRP takes_VBZ courage_NN to_TO admit_VB a_DT mistake_NN ._.",
    "The_DT new_JJ method_NN is_VBZ faster_JJR and_CC cheaper_JJR than_IN the_DT old_JJ one_NN ._.",
    "Nothing_NN is_VBZ more_RBR valuable_JJ than_IN time_NN ._.",
    "The_DT second_JJ edition_NN is_VBZ far_RB better_JJR than_IN the_DT first_JJ ._.",
    "The_DT higher_JJR the_DT stakes_NNS ,_, the_DT greater_JJR the_DT pressure_NN ._.",
    "Prices_NNS rose_VBD more_RBR sharply_RB than_IN anyone_NN expected_VBD ._.",
    "She_PRP is_VBZ the_DT most_RBS talented_JJ singer_NN of_IN her_PRP$ generation_NN ._.",
    "Fewer_JJR students_NNS chose_VBD history_NN this_DT year_NN ._.",
    "The_DT simplest_JJS explanation_NN is_VBZ usually_RB the_DT best_JJS ._.",
    "Their_PRP$ latest_JJS proposal_NN goes_VBZ further_RBR than_IN the_DT previous_JJ one_NN ._.",
    "A_DT foreign_JJ language_NN opens_VBZ doors_NNS to_TO other_JJ cultures_NNS ._.",
    # --- be / seem / appear predicatives ---
    "The_DT results_NNS were_VBD clear_JJ ._.",
    "The_DT theory_NN is_VBZ not_RB correct_JJ ._.",
    "The_DT streets_NNS seem_VBP quiet_JJ tonight_RB ._.",
    "The_DT task_NN appeared_VBD simple_JJ at_IN first_JJ sight_NN ._.",
    "The_DT judges_NNS were_VBD generous_JJ ,_, and_CC the_DT audience_NN was_VBD kind_JJ ._.",
    "The_DT argument_NN is_VBZ subtle_JJ but_CC sound_JJ ._.",
    "Most_JJS voters_NNS are_VBP angry_JJ about_IN rising_VBG prices_NNS ._.",
    "The_DT instructions_NNS were_VBD remarkably_RB clear_JJ ._.",
    "The_DT house_NN is_VBZ a_DT museum_NN now_RB ._.",
    "His_PRP$ intentions_NNS were_VBD good_JJ ,_, but_CC his_PRP$ methods_NNS were_VBD harsh_JJ ._.",
    # --- contractions and clitics ---
    "It_PRP 's_VBZ never_RB too_RB late_JJ to_TO start_VB ._.",
    "They_PRP 're_VBP planning_VBG a_DT new_JJ campaign_NN ._.",
    "We_PRP 've_VBP seen_VBN this_DT pattern_NN before_RB ._.",
    "She_PRP 'll_MD announce_VB her_PRP$ decision_NN tomorrow_RB ._.",
    "He_PRP did_VBD n't_RB answer_VB the_DT question_NN ._.",
    "You_PRP ca_MD n't_RB please_VB everyone_NN ._.",
    "I_PRP 'd_MD rather_RB walk_VB than_IN drive_VB ._.",
    "The_DT country_NN 's_POS borders_NNS have_VBP changed_VBN many_JJ times_NNS ._.",
    "The_DT workers_NNS '_POS demands_NNS were_VBD reasonable_JJ ._.",
    "There_EX 's_VBZ no_DT reason_NN to_TO panic_VB ._.",
    # --- additional mixed material ---
    "The_DT lecture_NN covered_VBD three_CD centuries_NNS of_IN European_JJ art_NN ._.",
    "A_DT sudden_JJ storm_NN forced_VBD the_DT ships_NNS back_RB to_TO port_NN ._.",
    "The_DT editor_NN rejected_VBD the_DT article_NN without_IN explanation_NN ._.",
    "Global_JJ trade_NN expanded_VBD rapidly_RB after_IN the_DT war_NN ._.",
    "The_DT hospital_NN treats_VBZ hundreds_NNS of_IN patients_NNS every_DT day_NN ._.",
    "Volunteers_NNS distributed_VBD food_NN and_CC blankets_NNS to_TO the_DT refugees_NNS ._.",
    "The_DT judge_NN ordered_VBD a_DT new_JJ trial_NN ._.",
    "Inflation_NN erodes_VBZ the_DT value_NN of_IN savings_NNS ._.",
    "The_DT senator_NN promised_VBD to_TO fight_VB the_DT proposed_VBN cuts_NNS ._.",
    "An_DT independent_JJ panel_NN will_MD examine_VB the_DT evidence_NN ._.",
    "The_DT orchestra_NN performed_VBD to_TO a_DT full_JJ house_NN ._.",
    "The_DT mayor_NN opened_VBD the_DT new_JJ park_NN on_IN Saturday_NNP ._.",
    "The_DT two_CD leaders_NNS signed_VBD the_DT agreement_NN in_IN Geneva_NNP ._.",
    "Her_PRP$ research_NN focuses_VBZ on_IN early_JJ childhood_NN development_NN ._.",
]


def main():
    lines = []
    total_tokens = 0
    for sent in SENTENCES:
        for item in sent.split():
            word, sep, tag = item.rpartition("_")
            if not sep or not word or tag not in TAG_SET:
                raise ValueError(f"bad item {item!r} in: {sent[:60]}...")
            lines.append(f"{word}\t{tag}")
            total_tokens += 1
        lines.append("")
    with open("data/samples/handtagged_200.tsv", "w") as f:
        f.write("# Hand-tagged reference sample: token<TAB>tag, blank line between sentences.\n")
        f.write("\n".join(lines))
    print(f"{len(SENTENCES)} sentences, {total_tokens} tokens")


if __name__ == "__main__":
    main()
