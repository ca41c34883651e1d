// Stock few-shot demonstrations, one list per prompt method.

#include "exemplars.hpp"

namespace ppnl::detail {

void add_stock_exemplars(ExemplarStore& store) {
  store.add("naive-5",
            "Provide a sequence of actions to navigate a world to reach a goal similarly to the examples below. (0,0) is located in the upper-left corner and (M, N) lies in the M row and N column.",
            {
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (2,1). Go from (0,1) to (3,4)",
                 {
                     {"Actions", "right right right down down down"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (1,5) and (1,2). Go from (5,4) to (0,5)",
                 {
                     {"Actions", "up up up up up right"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (0,3), (2,5) and (5,2). Go from (4,2) to (0,5)",
                 {
                     {"Actions", "up up up right right up right"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (3,5), (4,2), (3,3) and (0,4). Go from (1,5) to (3,1)",
                 {
                     {"Actions", "left left left left down down"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (2,5), (5,2), (0,4), (1,4) and (0,1). Go from (4,2) to (1,2)",
                 {
                     {"Actions", "up up up"},
                 }},
            });
  store.add("naive-10",
            "Provide a sequence of actions to navigate a world to reach a goal similarly to the examples below. (0,0) is located in the upper-left corner and (M, N) lies in the M row and N column.",
            {
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (2,1). Go from (0,1) to (3,4)",
                 {
                     {"Actions", "right right right down down down"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (0,4). Go from (5,4) to (2,4)",
                 {
                     {"Actions", "up up up"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (0,4) and (1,5). Go from (0,5) to (1,1)",
                 {
                     {"Actions", "Goal not reachable"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (1,5) and (5,0). Go from (5,5) to (0,1)",
                 {
                     {"Actions", "up up up left up up left left left"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (0,3), (2,5) and (5,2). Go from (4,2) to (0,5)",
                 {
                     {"Actions", "up up up right right up right"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (0,3), (2,1) and (4,2). Go from (1,5) to (0,5)",
                 {
                     {"Actions", "up"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (2,4), (4,4), (5,3) and (4,5). Go from (0,4) to (5,5)",
                 {
                     {"Actions", "Goal not reachable"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (5,1), (4,4), (1,4) and (1,5). Go from (5,5) to (3,0)",
                 {
                     {"Actions", "up up left left left left left"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (2,5), (5,2), (0,4), (1,4) and (0,1). Go from (4,2) to (1,2)",
                 {
                     {"Actions", "up up up"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (0,5), (5,0), (5,4), (0,0) and (5,3). Go from (5,2) to (2,4)",
                 {
                     {"Actions", "up up up right right"},
                 }},
            });
  store.add("naive-15",
            "Provide a sequence of actions to navigate a world to reach a goal similarly to the examples below. (0,0) is located in the upper-left corner and (M, N) lies in the M row and N column.",
            {
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (2,1). Go from (0,1) to (3,4)",
                 {
                     {"Actions", "right right right down down down"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (0,4). Go from (5,4) to (2,4)",
                 {
                     {"Actions", "up up up"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (5,3). Go from (2,4) to (4,3)",
                 {
                     {"Actions", "left down down"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (0,4) and (1,5). Go from (0,5) to (1,1)",
                 {
                     {"Actions", "Goal not reachable"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (1,5) and (5,0). Go from (5,5) to (0,1)",
                 {
                     {"Actions", "up up up left up up left left left"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (4,3) and (2,3). Go from (5,5) to (5,4)",
                 {
                     {"Actions", "left"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (0,3), (2,5) and (5,2). Go from (4,2) to (0,5)",
                 {
                     {"Actions", "up up up right right up right"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (0,3), (2,1) and (4,2). Go from (1,5) to (0,5)",
                 {
                     {"Actions", "up"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (1,0), (0,0) and (1,3). Go from (3,2) to (3,1)",
                 {
                     {"Actions", "left"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (3,5), (4,2), (3,3) and (0,4). Go from (1,5) to (3,1)",
                 {
                     {"Actions", "left left left left down down"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (5,1), (4,4), (1,4) and (1,5). Go from (5,5) to (3,0)",
                 {
                     {"Actions", "up up left left left left left"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (2,4), (4,4), (5,3) and (4,5). Go from (0,4) to (5,5)",
                 {
                     {"Actions", "Goal not reachable."},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (2,5), (5,2), (0,4), (1,4) and (0,1). Go from (4,2) to (1,2)",
                 {
                     {"Actions", "up up up"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (0,5), (5,0), (5,4), (0,0) and (5,3). Go from (5,2) to (2,4)",
                 {
                     {"Actions", "up up up right right"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (3,0), (2,3), (1,2), (2,5) and (0,0). Go from (4,3) to (5,4)",
                 {
                     {"Actions", "right down"},
                 }},
            });
  store.add("action_effect",
            "Provide a sequence of actions to navigate a world to reach a goal similarly to the examples below. (0,0) is located in the upper-left corner and (M, N) lies in the M row and N column.",
            {
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (2,1). Go from (0,1) to (3,4)",
                 {
                     {"Actions", "Go right. You are now at (0,2). Go right. You are now at (0,3). Go right. You are now at (0,4). Go down. You are now at (1,4). Go down. You are now at (2,4). Go down. You are now at (3,4). Hence, the action sequence is: right right right down down down"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (1,5) and (1,2). Go from (5,4) to (0,5)",
                 {
                     {"Actions", "Go up. You are now at (4,4). Go up. You are now at (3,4). Go up. You are now at (2,4). Go up. You are now at (1,4). Go up. You are now at (0,4). Go right. You are now at (0,5). Hence, the action sequence is: up up up up up right"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (0,3), (2,5) and (5,2). Go from (4,2) to (0,5)",
                 {
                     {"Actions", "Go up. You are now at (3,2). Go up. You are now at (2,2). Go up. You are now at (1,2). Go right. You are now at (1,3). Go right. You are now at (1,4). Go up. You are now at (0,4). Go right. You are now at (0,5). Hence, the action sequence is: up up up right right up right"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (3,5), (4,2), (3,3) and (0,4). Go from (1,5) to (3,1)",
                 {
                     {"Actions", "Go left. You are now at (1,4). Go left. You are now at (1,3). Go left. You are now at (1,2). Go left. You are now at (1,1). Go down. You are now at (2,1). Go down. You are now at (3,1). Hence, the action sequence is: left left left left down down"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (2,5), (5,2), (0,4), (1,4) and (0,1). Go from (4,2) to (1,2)",
                 {
                     {"Actions", "Go up. You are now at (3,2). Go up. You are now at (2,2). Go up. You are now at (1,2). Hence, the action sequence is: up up up"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (0,4) and (1,5). Go from (0,5) to (1,1)",
                 {
                     {"Actions", "Goal not reachable."},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (2,4), (4,4), (5,3) and (4,5). Go from (0,4) to (5,5)",
                 {
                     {"Actions", "Goal not reachable."},
                 }},
            });
  store.add("cot",
            "Provide a sequence of actions to navigate a world to reach a goal similarly to the examples below. (0,0) is located in the upper-left corner and (M, N) lies in the M row and N column.",
            {
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (2,1). Go from (0,1) to (3,4)",
                 {
                     {"Actions", "(3,4) is 3 steps down and 3 steps to the right of (0,1). To avoid the obstacle at (2,1), which is 2 steps down from (0,1), I should start by moving right. Therefore, my action sequence is: right right right down down down."},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (1,5) and (1,2). Go from (5,4) to (0,5)",
                 {
                     {"Actions", "(0,5) is 5 steps up and 1 step to the right of (5,4). To avoid the obstacle at (1,5), which is 4 steps up and 1 step to the right from (5,4), I should move right last.  Therefore, my action sequence is: up up up up up right."},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (0,3), (2,5) and (5,2). Go from (4,2) to (0,5)",
                 {
                     {"Actions", "(0,5) is 4 steps up and 3 steps to the right of (4,2). I can start by going up. To avoid the obstacle at (0,3), which is 4 steps up and 1 step to the right of (4,2), I should take a right at (1,3). Therefore my action sequence is: up up up right right up right"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (3,5), (4,2), (3,3) and (0,4). Go from (1,5) to (3,1)",
                 {
                     {"Actions", "(3,1) is 4 steps to the left and 2 steps to the right of (1,5). No obstacles fall on this path. Therefore my action sequence is: left left left left down down."},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (2,5), (5,2), (0,4), (1,4) and (0,1). Go from (4,2) to (1,2)",
                 {
                     {"Actions", "(1,2) is 3 steps up from (4,2).  No obstacles fall on this path. Therefore my action sequence is: up up up."},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (0,4) and (1,5). Go from (0,5) to (1,1)",
                 {
                     {"Actions", "(0,5) is surrounded by obstacles. Therefore, the goal is not reachable from my location."},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (2,4), (4,4), (5,3) and (4,5). Go from (0,4) to (5,5)",
                 {
                     {"Actions", "(5,5) is surrounded by obstacles. Therefore, the goal is not reachable from my location."},
                 }},
            });
  store.add("react",
            "Provide a sequence of actions to navigate a world to reach a goal similarly to the examples below. (0,0) is located in the upper-left corner and (M, N) lies in the M row and N column.",
            {
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (2,3), (5,5) and (5,2). Go from (0,4) to (5,0)",
                 {
                     {"Thought 1", "(5,0) is 5 steps down and 4 steps to the left of (0,4). To avoid the obstacle at (2,3), which is 2 steps down and 1 step to the left from (0,4), I should move left first."},
                     {"Act 1", "left left left left down down down down down."},
                     {"Obs 1", "Performing the action sequence leads to (5,0). The task has been solved."},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (3,0), (1,5), (3,4), (5,2) and (5,3). Go from (1,4) to (4,0)",
                 {
                     {"Thought 1", "(4,0) is 3 steps down and 4 steps to the left of (1,4). To avoid the obstacle at (3,0), which is 2 steps down and 4 steps to the left from (1,4), I should move left last."},
                     {"Act 1", "down down down left left left left."},
                     {"Obs 1", "After executing the first step, I am at (2,4). If I execute the next step I will run into the obstacle at (4,3)."},
                     {"Thought 2", "I have to find a path to get to (4,0) from (2,4). (4,0) is 2 steps down and 4 steps to the left from (2,4). In order to avoid the obstacle at (4,3), which is one step down, I have to start by moving left first."},
                     {"Act 2", "left left left left down down"},
                     {"Obs 2", "After executing the first 4 steps, I am at (2,0). If I execute the next step I will run into the obstacle at (3,0)."},
                     {"Thought 3", "I have to find a path to get to (4,0) from (2,0). (4,0) is 2 steps down from (2,0). In order to avoid the obstacle at (4,3), which is one step down, I have to move right, then take two steps down, then move left."},
                     {"Act 3", "right down down left"},
                     {"Obs 3", "Performing the action sequence leads to (4,0). The task has been solved."},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (0,5), (3,5), (0,0), (4,5) and (4,4). Go from (1,1) to (5,0)",
                 {
                     {"Thought 1", "(5,0) is 4 steps down and 1 step to the left of (1,1). To avoid the obstacle at (0,0), which is 1 step up and 1 step to the left from (1,1), I should move down first."},
                     {"Act 1", "down down down down left."},
                     {"Obs 1", "Performing the action sequence leads to (5,0). The task has been solved."},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (5,5), (5,0), (3,5) and (4,0). Go from (3,4) to (1,3)",
                 {
                     {"Thought 1", "(1,3) is 2 steps up and 1 step to the left of (3,4). No obstacles fall on this path."},
                     {"Act 1", "up up left"},
                     {"Obs 1", "Performing the action sequence leads to (1,3). The task has been solved."},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (1,3), (4,2), (3,3) and (1,4). Go from (3,2) to (4,4)",
                 {
                     {"Thought 1", "(4,4) is 1 step down and 2 step to the right of (3,2). To avoid the obstacle at (3,3) which is one step to the right, I have to go down first"},
                     {"Act 1", "down left left"},
                     {"Obs 1", "If I execute the first step I will run into the obstacle at (4,2)."},
                     {"Thought 2", " I have to find a path to get to (4,4) from (3,2). (4,4) is 1 step down and 2 step to the right of (3,2). In order to avoid the obstacle at (4,2) which is one step down, and the obstacle at (3,3) which one step to the right, I have to move up, take two steps to the right and two steps down."},
                     {"Act 2", "up right right down down"},
                     {"Obs 2", "Performing the action sequence leads to (4,4). The task has been solved."},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (0,3), (1,2), (3,5) and (0,1). Go from (0,2) to (3,1)",
                 {
                     {"Thought 1", "(3,1) is 3 steps down and 1 step to the left of (0,2). To avoid the obstacle at (1,2), which is 1 step down from (0,2), I should start by moving down."},
                     {"Act 1", "down down down left"},
                     {"Obs 1", "If I execute the first step I will run into the obstacle at (1,2)."},
                     {"Thought 2", "(0,2) is surrounded by obstacles. Therefore, the goal is not reachable from my location."},
                     {"Act 2", "No action"},
                     {"Obs 2", "No action is to be performed. The goal is not reachable. The task has been solved."},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (2,5), (5,2), (0,4), (1,4) and (0,1). Go from (4,1) to (1,5)",
                 {
                     {"Thought 1", "(1,5) is 3 steps up and 4 steps to the right of (4,1). To avoid the obstacle at (2,5), which is 2 steps up and 4 steps to the right from (4,1), I should move right last."},
                     {"Act 1", "up up up right right right right"},
                     {"Obs 1", "After executing the first 5 steps, I am at (1,3). If I execute the next step I will run into the obstacle at (1,4)."},
                     {"Thought 2", "(1,5) is surrounded by obstacles. Therefore, the goal is not reachable from my location."},
                     {"Act 2", "No action"},
                     {"Obs 2", "No action is to be performed. The goal is not reachable. The task has been solved."},
                 }},
            });
  store.add("ordering",
            "Provide a plan to navigate a world to reach all the goals while satisfying any constraints similarly to the examples below. (0,0) is located in the upper-left corner and (M, N) lies in the M row and N column.",
            {
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (5,2), (2,3) and (5,0). You are at (0,2). You have to visit p0, p1, p2, p3 and p4. p0 is located at (3,5), p1 is located at (5,4), p2 is located at (2,4), p3 is located at (3,2) and p4 is located at (4,4). Visit p1 and p3 before p0, p2 and p4.",
                 {
                     {"Order", "p3, p1, p4, p2, p0"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (2,5), (0,2) and (4,5). You are at (4,2). You have to visit p0, p1, p2, p3 and p4. p0 is located at (0,1), p1 is located at (2,2), p2 is located at (1,2), p3 is located at (5,3) and p4 is located at (5,5).",
                 {
                     {"Order", "p3, p4, p1, p2, p0"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (1,0), (3,3) and (1,1). You are at (3,5). You have to visit p0, p1, p2, p3, p4 and p5. p0 is located at (1,3), p1 is located at (0,4), p2 is located at (4,0), p3 is located at (2,4), p4 is located at (5,0) and p5 is located at (5,4). Visit p4, p3 and p2 before p0, p1 and p5.",
                 {
                     {"Order", "p3, p2, p4, p5, p0, p1"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (0,1). You are at (4,0). You have to visit p0, p1, p2, p3 and p4. p0 is located at (3,2), p1 is located at (1,1), p2 is located at (2,2), p3 is located at (0,4) and p4 is located at (1,5). Visit p2 and p3 before p0, p1 and p4",
                 {
                     {"Order", "p2, p3, p4, p1, p0"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (2,1). You are at (5,3). You have to visit p0 and p1. p0 is located at (2,5) and p1 is located at (2,2). Visit p1 before p0",
                 {
                     {"Order", "p1, p0"},
                 }},
            });
  store.add("ordering-optimal",
            "Provide an optimal plan to navigate a world to reach all the goals while satisfying any constraints similarly to the examples below. (0,0) is located in the upper-left corner and (M, N) lies in the M row and N column. A path is optimal if it satisfies the constraints using the minimum number of actions",
            {
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (5,2), (2,3) and (5,0). You are at (0,2). You have to visit p0, p1, p2, p3 and p4. p0 is located at (3,5), p1 is located at (5,4), p2 is located at (2,4), p3 is located at (3,2) and p4 is located at (4,4). Visit p1 and p3 before p0, p2 and p4.",
                 {
                     {"Order", "The optimal plan is: p3, p1, p4, p2, p0"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (2,5), (0,2) and (4,5). You are at (4,2). You have to visit p0, p1, p2, p3 and p4. p0 is located at (0,1), p1 is located at (2,2), p2 is located at (1,2), p3 is located at (5,3) and p4 is located at (5,5).",
                 {
                     {"Order", "The optimal plan is: p3, p4, p1, p2, p0"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (1,0), (3,3) and (1,1). You are at (3,5). You have to visit p0, p1, p2, p3, p4 and p5. p0 is located at (1,3), p1 is located at (0,4), p2 is located at (4,0), p3 is located at (2,4), p4 is located at (5,0) and p5 is located at (5,4). Visit p4, p3 and p2 before p0, p1 and p5.",
                 {
                     {"Order", "The optimal plan is: p3, p2, p4, p5, p0, p1"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (0,1). You are at (4,0). You have to visit p0, p1, p2, p3 and p4. p0 is located at (3,2), p1 is located at (1,1), p2 is located at (2,2), p3 is located at (0,4) and p4 is located at (1,5). Visit p2 and p3 before p0, p1 and p4",
                 {
                     {"Order", "The optimal plan is: p2, p3, p4, p1, p0"},
                 }},
                {"You are in a 6 by 6 world. There are obstacles that you have to avoid at: (2,1). You are at (5,3). You have to visit p0 and p1. p0 is located at (2,5) and p1 is located at (2,2). Visit p1 before p0",
                 {
                     {"Order", "The optimal plan is: p1, p0"},
                 }},
            });
}

}  // namespace ppnl::detail
